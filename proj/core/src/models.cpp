#include "chebfilter/models.hpp"

#include <cmath>

#include <json.hpp>

#include "chebfilter/chebyshev.hpp"
#include "chebfilter/error.hpp"

namespace chebfilter {

using ad::Tape;
using ad::TensorPtr;
using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;

void glorot_init(ad::Tensor& t, std::size_t fan_in, std::size_t fan_out, Rng& rng) {
    const double bound = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    for (double& v : t.values) v = rng.uniform(-bound, bound);
}

/// binom(K, k) / 2^K for k = 0..K, by multiplicative recurrence.
std::vector<double> scaled_binomials(std::size_t order) {
    std::vector<double> c(order + 1);
    c[0] = std::pow(0.5, static_cast<double>(order));
    for (std::size_t k = 0; k + 1 <= order; ++k) {
        c[k + 1] = c[k] * static_cast<double>(order - k) / static_cast<double>(k + 1);
    }
    return c;
}

}  // namespace

Model::Model(const Dataset& dataset, const ModelConfig& config)
    : dataset_(&dataset), cfg_(config) {
    cfg_.validate();
    if (dataset.graph.n == 0) throw Error("model: empty dataset");
    const std::size_t f = dataset.features.cols;
    const std::size_t c = static_cast<std::size_t>(dataset.num_classes);
    const std::size_t h = static_cast<std::size_t>(cfg_.hidden);
    const std::size_t kk = static_cast<std::size_t>(cfg_.K);

    features_ = ad::make_tensor({dataset.graph.n, f}, dataset.features.data);

    switch (cfg_.model) {
        case ModelKind::Mlp:
            break;
        case ModelKind::Gcn:
        case ModelKind::GprGnn:
            prop_op_.emplace(dataset.graph, OperatorKind::RenormalizedAdjacency);
            break;
        case ModelKind::BernNet:
            prop_op_.emplace(dataset.graph, OperatorKind::NormalizedLaplacian);
            break;
        case ModelKind::ChebNet:
        case ModelKind::ChebBase:
        case ModelKind::ChebBaseK:
        case ModelKind::ChebNet2:
            prop_op_.emplace(dataset.graph, OperatorKind::ScaledLaplacian, 2.0);
            break;
    }

    Rng init_rng(cfg_.seed * 0x9e3779b97f4a7c15ULL + 0x1234abcd);
    auto add_param = [&](const std::string& name, std::vector<std::size_t> shape,
                         bool prop_group) {
        TensorPtr t = ad::make_param(std::move(shape));
        params_.emplace_back(name, t);
        is_prop_param_.push_back(prop_group);
        return t;
    };
    auto add_linear = [&](const std::string& prefix, std::size_t in, std::size_t out) {
        TensorPtr w = add_param(prefix + ".weight", {in, out}, false);
        glorot_init(*w, in, out, init_rng);
        add_param(prefix + ".bias", {out}, false);
    };

    if (cfg_.model == ModelKind::ChebNet) {
        for (std::size_t k = 0; k <= kk; ++k) {
            TensorPtr w = add_param("conv1.weight_" + std::to_string(k), {f, h}, false);
            glorot_init(*w, f, h, init_rng);
        }
        add_param("conv1.bias", {h}, false);
        for (std::size_t k = 0; k <= kk; ++k) {
            TensorPtr w = add_param("conv2.weight_" + std::to_string(k), {h, c}, false);
            glorot_init(*w, h, c, init_rng);
        }
        add_param("conv2.bias", {c}, false);
    } else {
        add_linear("linear1", f, h);
        add_linear("linear2", h, c);
    }

    switch (cfg_.model) {
        case ModelKind::ChebBase:
        case ModelKind::ChebBaseK: {
            // Start with no feature propagation: the order-0 term only.
            TensorPtr w = add_param("prop.coeffs", {kk + 1}, true);
            w->values[0] = 1.0;
            break;
        }
        case ModelKind::GprGnn: {
            TensorPtr w = add_param("prop.coeffs", {kk + 1}, true);
            for (std::size_t k = 0; k <= kk; ++k) {
                w->values[k] = cfg_.alpha * std::pow(1.0 - cfg_.alpha, static_cast<double>(k));
            }
            w->values[kk] = std::pow(1.0 - cfg_.alpha, static_cast<double>(kk));
            break;
        }
        case ModelKind::BernNet: {
            TensorPtr w = add_param("prop.coeffs", {kk + 1}, true);
            std::fill(w->values.begin(), w->values.end(), 1.0);
            break;
        }
        case ModelKind::ChebNet2: {
            // Learnable filter values at the Chebyshev nodes; all-pass start.
            TensorPtr g = add_param("prop.coeffs", {kk + 1, 1}, true);
            std::fill(g->values.begin(), g->values.end(), 1.0);

            // Constant transform mapping filter node-values to Chebyshev
            // series weights: row k holds (2/(K+1)) T_k(x_j), first row
            // halved under the interpolation convention.
            coeff_transform_ = ad::make_tensor({kk + 1, kk + 1});
            const double denom = static_cast<double>(kk + 1);
            for (std::size_t k = 0; k <= kk; ++k) {
                const double rowscale = (k == 0 && cfg_.halve_first_coeff) ? 1.0 : 2.0;
                for (std::size_t j = 0; j <= kk; ++j) {
                    const double theta = (static_cast<double>(j) + 0.5) * kPi / denom;
                    coeff_transform_->values[k * (kk + 1) + j] =
                        rowscale / denom * std::cos(static_cast<double>(k) * theta);
                }
            }
            if (cfg_.extra_linear_after_prop) add_linear("readout", c, c);
            break;
        }
        default: break;
    }
}

TensorPtr Model::param(const std::string& name) const {
    for (const auto& [n, t] : params_) {
        if (n == name) return t;
    }
    throw Error("model: no parameter named '" + name + "'");
}

std::vector<TensorPtr> Model::linear_params() const {
    std::vector<TensorPtr> out;
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (!is_prop_param_[i]) out.push_back(params_[i].second);
    }
    return out;
}

std::vector<TensorPtr> Model::prop_params() const {
    std::vector<TensorPtr> out;
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (is_prop_param_[i]) out.push_back(params_[i].second);
    }
    return out;
}

std::size_t Model::param_count() const {
    std::size_t total = 0;
    for (const auto& [name, t] : params_) total += t->size();
    return total;
}

TensorPtr Model::mlp_tower(Tape& tape, Rng& rng, bool training, const char* prefix,
                           std::size_t /*out_width*/) const {
    (void)prefix;
    TensorPtr x = ad::dropout(tape, features_, cfg_.dropout_linear, rng, training);
    TensorPtr z1 = ad::add_bias(tape, ad::matmul(tape, x, param("linear1.weight")),
                                param("linear1.bias"));
    TensorPtr a1 = ad::relu(tape, z1);
    TensorPtr d1 = ad::dropout(tape, a1, cfg_.dropout_linear, rng, training);
    return ad::add_bias(tape, ad::matmul(tape, d1, param("linear2.weight")),
                        param("linear2.bias"));
}

TensorPtr Model::forward(Tape& tape, Rng& dropout_rng, bool training) const {
    const std::size_t kk = static_cast<std::size_t>(cfg_.K);

    switch (cfg_.model) {
        case ModelKind::Mlp:
            return mlp_tower(tape, dropout_rng, training, "linear", 0);

        case ModelKind::Gcn: {
            TensorPtr x = ad::dropout(tape, features_, cfg_.dropout_linear, dropout_rng,
                                      training);
            TensorPtr h1 = ad::graph_matvec(tape, *prop_op_,
                                            ad::matmul(tape, x, param("linear1.weight")));
            h1 = ad::relu(tape, ad::add_bias(tape, h1, param("linear1.bias")));
            TensorPtr d1 = ad::dropout(tape, h1, cfg_.dropout_linear, dropout_rng, training);
            TensorPtr h2 = ad::graph_matvec(tape, *prop_op_,
                                            ad::matmul(tape, d1, param("linear2.weight")));
            return ad::add_bias(tape, h2, param("linear2.bias"));
        }

        case ModelKind::ChebNet: {
            auto conv = [&](const TensorPtr& input, const char* prefix) {
                TensorPtr prev = input;                              // t_0
                TensorPtr curr = ad::graph_matvec(tape, *prop_op_, input);  // t_1
                TensorPtr acc = ad::matmul(
                    tape, input, param(std::string(prefix) + ".weight_0"));
                if (kk >= 1) {
                    acc = ad::elementwise_add(
                        tape, acc,
                        ad::matmul(tape, curr, param(std::string(prefix) + ".weight_1")));
                }
                for (std::size_t k = 2; k <= kk; ++k) {
                    TensorPtr next = ad::elementwise_sub(
                        tape, ad::scale(tape, ad::graph_matvec(tape, *prop_op_, curr), 2.0),
                        prev);
                    acc = ad::elementwise_add(
                        tape, acc,
                        ad::matmul(tape, next,
                                   param(std::string(prefix) + ".weight_" +
                                         std::to_string(k))));
                    prev = curr;
                    curr = next;
                }
                return ad::add_bias(tape, acc, param(std::string(prefix) + ".bias"));
            };
            TensorPtr x = ad::dropout(tape, features_, cfg_.dropout_linear, dropout_rng,
                                      training);
            TensorPtr h1 = ad::relu(tape, conv(x, "conv1"));
            TensorPtr d1 = ad::dropout(tape, h1, cfg_.dropout_linear, dropout_rng, training);
            return conv(d1, "conv2");
        }

        case ModelKind::ChebBase:
        case ModelKind::ChebBaseK: {
            TensorPtr base = mlp_tower(tape, dropout_rng, training, "linear", 0);
            TensorPtr feat = ad::dropout(tape, base, cfg_.dropout_prop, dropout_rng,
                                         training);
            TensorPtr coeffs = param("prop.coeffs");
            TensorPtr acc = ad::index_scale(tape, feat, coeffs, 0);
            TensorPtr prev = feat;
            TensorPtr curr;
            for (std::size_t k = 1; k <= kk; ++k) {
                if (k == 1) {
                    curr = ad::graph_matvec(tape, *prop_op_, feat);
                } else {
                    TensorPtr next = ad::elementwise_sub(
                        tape, ad::scale(tape, ad::graph_matvec(tape, *prop_op_, curr), 2.0),
                        prev);
                    prev = curr;
                    curr = next;
                }
                TensorPtr term = ad::index_scale(tape, curr, coeffs, k);
                if (cfg_.model == ModelKind::ChebBaseK) {
                    term = ad::scale(tape, term, 1.0 / static_cast<double>(k));
                }
                acc = ad::elementwise_add(tape, acc, term);
            }
            return acc;
        }

        case ModelKind::GprGnn: {
            TensorPtr base = mlp_tower(tape, dropout_rng, training, "linear", 0);
            TensorPtr feat = ad::dropout(tape, base, cfg_.dropout_prop, dropout_rng,
                                         training);
            TensorPtr coeffs = param("prop.coeffs");
            TensorPtr acc = ad::index_scale(tape, feat, coeffs, 0);
            TensorPtr z = feat;
            for (std::size_t k = 1; k <= kk; ++k) {
                z = ad::graph_matvec(tape, *prop_op_, z);
                acc = ad::elementwise_add(tape, acc, ad::index_scale(tape, z, coeffs, k));
            }
            return acc;
        }

        case ModelKind::BernNet: {
            TensorPtr base = mlp_tower(tape, dropout_rng, training, "linear", 0);
            TensorPtr feat = ad::dropout(tape, base, cfg_.dropout_prop, dropout_rng,
                                         training);
            TensorPtr pos = ad::relu(tape, param("prop.coeffs"));
            const std::vector<double> binom = scaled_binomials(kk);

            // Basis term k applies L k times and (2I - L) K-k times,
            // sparsely; quadratic in K but never densified.
            std::vector<TensorPtr> lap_powers(kk + 1);
            lap_powers[0] = feat;
            for (std::size_t k = 1; k <= kk; ++k) {
                lap_powers[k] = ad::graph_matvec(tape, *prop_op_, lap_powers[k - 1]);
            }
            TensorPtr acc;
            for (std::size_t k = 0; k <= kk; ++k) {
                TensorPtr u = lap_powers[k];
                for (std::size_t r = 0; r + k < kk; ++r) {
                    u = ad::elementwise_sub(tape, ad::scale(tape, u, 2.0),
                                            ad::graph_matvec(tape, *prop_op_, u));
                }
                TensorPtr term =
                    ad::index_scale(tape, ad::scale(tape, u, binom[k]), pos, k);
                acc = acc ? ad::elementwise_add(tape, acc, term) : term;
            }
            return acc;
        }

        case ModelKind::ChebNet2: {
            TensorPtr base = mlp_tower(tape, dropout_rng, training, "linear", 0);
            TensorPtr feat = ad::dropout(tape, base, cfg_.dropout_prop, dropout_rng,
                                         training);
            TensorPtr node_values = ad::relu(tape, param("prop.coeffs"));
            TensorPtr weights = ad::matmul(tape, coeff_transform_, node_values);

            TensorPtr acc = ad::index_scale(tape, feat, weights, 0);
            TensorPtr prev = feat;
            TensorPtr curr;
            for (std::size_t k = 1; k <= kk; ++k) {
                if (k == 1) {
                    curr = ad::graph_matvec(tape, *prop_op_, feat);
                } else {
                    TensorPtr next = ad::elementwise_sub(
                        tape, ad::scale(tape, ad::graph_matvec(tape, *prop_op_, curr), 2.0),
                        prev);
                    prev = curr;
                    curr = next;
                }
                acc = ad::elementwise_add(tape, acc, ad::index_scale(tape, curr, weights, k));
            }
            if (cfg_.extra_linear_after_prop) {
                acc = ad::add_bias(tape, ad::matmul(tape, acc, param("readout.weight")),
                                   param("readout.bias"));
            }
            return acc;
        }
    }
    throw Error("model: unknown kind");
}

std::optional<FilterCoefficients> Model::implied_coefficients() const {
    const std::size_t kk = static_cast<std::size_t>(cfg_.K);
    switch (cfg_.model) {
        case ModelKind::ChebBase:
            return FilterCoefficients(Basis::Chebyshev, param("prop.coeffs")->values);
        case ModelKind::ChebBaseK: {
            std::vector<double> w = param("prop.coeffs")->values;
            for (std::size_t k = 1; k < w.size(); ++k) w[k] /= static_cast<double>(k);
            return FilterCoefficients(Basis::Chebyshev, std::move(w));
        }
        case ModelKind::GprGnn:
            return FilterCoefficients(Basis::Monomial, param("prop.coeffs")->values);
        case ModelKind::BernNet: {
            std::vector<double> w = param("prop.coeffs")->values;
            for (double& v : w) v = v > 0.0 ? v : 0.0;
            return FilterCoefficients(Basis::Bernstein, std::move(w));
        }
        case ModelKind::ChebNet2: {
            std::vector<double> node_values = param("prop.coeffs")->values;
            for (double& v : node_values) v = v > 0.0 ? v : 0.0;
            std::vector<double> w(kk + 1, 0.0);
            for (std::size_t k = 0; k <= kk; ++k) {
                double acc = 0.0;
                for (std::size_t j = 0; j <= kk; ++j) {
                    acc += coeff_transform_->values[k * (kk + 1) + j] * node_values[j];
                }
                w[k] = acc;
            }
            return FilterCoefficients(Basis::Chebyshev, std::move(w));
        }
        default: return std::nullopt;
    }
}

SampledFilter Model::sample_filter(std::size_t grid) const {
    const std::optional<FilterCoefficients> coeffs = implied_coefficients();
    if (!coeffs.has_value()) return SampledFilter{};
    return sample_filter_response(*coeffs, grid);
}

std::string Model::state_to_json() const {
    json j = json::object();
    for (const auto& [name, t] : params_) {
        json entry;
        entry["shape"] = t->shape;
        entry["values"] = t->values;
        j[name] = std::move(entry);
    }
    return j.dump(2);
}

void Model::load_state_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw IoError(std::string("checkpoint: invalid JSON: ") + e.what());
    }
    for (auto& [name, t] : params_) {
        if (!j.contains(name)) throw IoError("checkpoint: missing parameter '" + name + "'");
        const auto shape = j[name]["shape"].get<std::vector<std::size_t>>();
        auto values = j[name]["values"].get<std::vector<double>>();
        if (shape != t->shape || values.size() != t->values.size()) {
            throw IoError("checkpoint: shape mismatch for '" + name + "'");
        }
        t->values = std::move(values);
    }
}

std::vector<double> Model::snapshot() const {
    std::vector<double> out;
    out.reserve(param_count());
    for (const auto& [name, t] : params_) {
        out.insert(out.end(), t->values.begin(), t->values.end());
    }
    return out;
}

void Model::restore(const std::vector<double>& snap) {
    if (snap.size() != param_count()) throw Error("model: snapshot size mismatch");
    std::size_t pos = 0;
    for (auto& [name, t] : params_) {
        std::copy(snap.begin() + static_cast<std::ptrdiff_t>(pos),
                  snap.begin() + static_cast<std::ptrdiff_t>(pos + t->size()),
                  t->values.begin());
        pos += t->size();
    }
}

}  // namespace chebfilter
