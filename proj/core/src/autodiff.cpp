#include "chebfilter/autodiff.hpp"

#include <algorithm>
#include <cmath>

#include "chebfilter/error.hpp"

namespace chebfilter::ad {

TensorPtr make_tensor(std::vector<std::size_t> shape) {
    auto t = std::make_shared<Tensor>();
    std::size_t total = 1;
    for (std::size_t d : shape) total *= d;
    t->shape = std::move(shape);
    t->values.assign(total, 0.0);
    return t;
}

TensorPtr make_tensor(std::vector<std::size_t> shape, std::vector<double> values) {
    auto t = make_tensor(std::move(shape));
    if (values.size() != t->values.size()) {
        throw Error("make_tensor: value count does not match shape");
    }
    t->values = std::move(values);
    return t;
}

TensorPtr make_param(std::vector<std::size_t> shape) {
    auto t = make_tensor(std::move(shape));
    t->requires_grad = true;
    return t;
}

void Tape::backward(const TensorPtr& loss) {
    if (consumed_) {
        throw Error("tape: backward already ran; re-execute the forward pass first");
    }
    if (loss->size() != 1) throw Error("tape: backward needs a scalar loss");
    consumed_ = true;
    loss->ensure_grad();
    loss->grad[0] = 1.0;
    for (std::size_t i = nodes_.size(); i-- > 0;) nodes_[i]();
}

namespace {

// Outputs of recorded ops carry gradients so downstream closures always
// have a buffer to read; leaf buffers are allocated here too.
TensorPtr make_output(std::vector<std::size_t> shape, bool track) {
    auto out = make_tensor(std::move(shape));
    if (track) {
        out->requires_grad = true;
        out->ensure_grad();
    }
    return out;
}

bool track_any(const TensorPtr& a) {
    if (a->requires_grad) {
        a->ensure_grad();
        return true;
    }
    return false;
}

bool track_any(const TensorPtr& a, const TensorPtr& b) {
    const bool ta = track_any(a);
    const bool tb = track_any(b);
    return ta || tb;
}

void check_same_shape(const TensorPtr& a, const TensorPtr& b, const char* op) {
    if (a->shape != b->shape) throw Error(std::string(op) + ": shape mismatch");
}

}  // namespace

TensorPtr matmul(Tape& tape, const TensorPtr& a, const TensorPtr& b) {
    if (a->shape.size() != 2 || b->shape.size() != 2 || a->shape[1] != b->shape[0]) {
        throw Error("matmul: incompatible shapes");
    }
    const std::size_t n = a->shape[0];
    const std::size_t k = a->shape[1];
    const std::size_t m = b->shape[1];
    const bool track = track_any(a, b);
    TensorPtr out = make_output({n, m}, track);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t kk = 0; kk < k; ++kk) {
            const double av = a->values[i * k + kk];
            if (av == 0.0) continue;
            const double* brow = b->values.data() + kk * m;
            double* orow = out->values.data() + i * m;
            for (std::size_t j = 0; j < m; ++j) orow[j] += av * brow[j];
        }
    }

    if (track) {
        tape.record([a, b, out, n, k, m] {
            if (a->requires_grad) {
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t kk = 0; kk < k; ++kk) {
                        double acc = 0.0;
                        const double* grow = out->grad.data() + i * m;
                        const double* brow = b->values.data() + kk * m;
                        for (std::size_t j = 0; j < m; ++j) acc += grow[j] * brow[j];
                        a->grad[i * k + kk] += acc;
                    }
                }
            }
            if (b->requires_grad) {
                for (std::size_t i = 0; i < n; ++i) {
                    const double* grow = out->grad.data() + i * m;
                    for (std::size_t kk = 0; kk < k; ++kk) {
                        const double av = a->values[i * k + kk];
                        if (av == 0.0) continue;
                        double* brow = b->grad.data() + kk * m;
                        for (std::size_t j = 0; j < m; ++j) brow[j] += av * grow[j];
                    }
                }
            }
        });
    }
    return out;
}

TensorPtr add_bias(Tape& tape, const TensorPtr& x, const TensorPtr& bias) {
    if (x->shape.size() != 2 || bias->size() != x->shape[1]) {
        throw Error("add_bias: bias length must match column count");
    }
    const std::size_t n = x->shape[0];
    const std::size_t m = x->shape[1];
    const bool track = track_any(x, bias);
    TensorPtr out = make_output(x->shape, track);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            out->values[i * m + j] = x->values[i * m + j] + bias->values[j];
        }
    }
    if (track) {
        tape.record([x, bias, out, n, m] {
            if (x->requires_grad) {
                for (std::size_t i = 0; i < out->grad.size(); ++i) {
                    x->grad[i] += out->grad[i];
                }
            }
            if (bias->requires_grad) {
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < m; ++j) {
                        bias->grad[j] += out->grad[i * m + j];
                    }
                }
            }
        });
    }
    return out;
}

TensorPtr relu(Tape& tape, const TensorPtr& x) {
    const bool track = track_any(x);
    TensorPtr out = make_output(x->shape, track);
    for (std::size_t i = 0; i < x->size(); ++i) {
        out->values[i] = x->values[i] > 0.0 ? x->values[i] : 0.0;
    }
    if (track) {
        tape.record([x, out] {
            for (std::size_t i = 0; i < x->size(); ++i) {
                if (x->values[i] > 0.0) x->grad[i] += out->grad[i];
            }
        });
    }
    return out;
}

TensorPtr dropout(Tape& tape, const TensorPtr& x, double p, Rng& rng, bool training) {
    if (p < 0.0 || p >= 1.0) throw Error("dropout: p must lie in [0, 1)");
    if (!training || p == 0.0) return x;

    const double keep_scale = 1.0 / (1.0 - p);
    auto mask = std::make_shared<std::vector<float>>(x->size());
    const bool track = track_any(x);
    TensorPtr out = make_output(x->shape, track);
    for (std::size_t i = 0; i < x->size(); ++i) {
        const double keep = rng.bernoulli(p) ? 0.0 : keep_scale;
        (*mask)[i] = static_cast<float>(keep);
        out->values[i] = x->values[i] * keep;
    }
    if (track) {
        tape.record([x, out, mask] {
            for (std::size_t i = 0; i < x->size(); ++i) {
                x->grad[i] += out->grad[i] * (*mask)[i];
            }
        });
    }
    return out;
}

TensorPtr scale(Tape& tape, const TensorPtr& x, double c) {
    const bool track = track_any(x);
    TensorPtr out = make_output(x->shape, track);
    for (std::size_t i = 0; i < x->size(); ++i) out->values[i] = c * x->values[i];
    if (track) {
        tape.record([x, out, c] {
            for (std::size_t i = 0; i < x->size(); ++i) x->grad[i] += c * out->grad[i];
        });
    }
    return out;
}

TensorPtr index_scale(Tape& tape, const TensorPtr& x, const TensorPtr& coeffs,
                      std::size_t k) {
    if (k >= coeffs->size()) throw Error("index_scale: coefficient index out of range");
    const double w = coeffs->values[k];
    const bool track = track_any(x, coeffs);
    TensorPtr out = make_output(x->shape, track);
    for (std::size_t i = 0; i < x->size(); ++i) out->values[i] = w * x->values[i];
    if (track) {
        tape.record([x, coeffs, out, k, w] {
            if (x->requires_grad) {
                for (std::size_t i = 0; i < x->size(); ++i) {
                    x->grad[i] += w * out->grad[i];
                }
            }
            if (coeffs->requires_grad) {
                double acc = 0.0;
                for (std::size_t i = 0; i < x->size(); ++i) {
                    acc += out->grad[i] * x->values[i];
                }
                coeffs->grad[k] += acc;
            }
        });
    }
    return out;
}

namespace {

TensorPtr add_like(Tape& tape, const TensorPtr& a, const TensorPtr& b, double sign_b,
                   const char* name) {
    check_same_shape(a, b, name);
    const bool track = track_any(a, b);
    TensorPtr out = make_output(a->shape, track);
    for (std::size_t i = 0; i < a->size(); ++i) {
        out->values[i] = a->values[i] + sign_b * b->values[i];
    }
    if (track) {
        tape.record([a, b, out, sign_b] {
            if (a->requires_grad) {
                for (std::size_t i = 0; i < a->size(); ++i) a->grad[i] += out->grad[i];
            }
            if (b->requires_grad) {
                for (std::size_t i = 0; i < b->size(); ++i) {
                    b->grad[i] += sign_b * out->grad[i];
                }
            }
        });
    }
    return out;
}

}  // namespace

TensorPtr elementwise_add(Tape& tape, const TensorPtr& a, const TensorPtr& b) {
    return add_like(tape, a, b, 1.0, "elementwise_add");
}

TensorPtr elementwise_sub(Tape& tape, const TensorPtr& a, const TensorPtr& b) {
    return add_like(tape, a, b, -1.0, "elementwise_sub");
}

TensorPtr elementwise_mul(Tape& tape, const TensorPtr& a, const TensorPtr& b) {
    check_same_shape(a, b, "elementwise_mul");
    const bool track = track_any(a, b);
    TensorPtr out = make_output(a->shape, track);
    for (std::size_t i = 0; i < a->size(); ++i) {
        out->values[i] = a->values[i] * b->values[i];
    }
    if (track) {
        tape.record([a, b, out] {
            if (a->requires_grad) {
                for (std::size_t i = 0; i < a->size(); ++i) {
                    a->grad[i] += b->values[i] * out->grad[i];
                }
            }
            if (b->requires_grad) {
                for (std::size_t i = 0; i < b->size(); ++i) {
                    b->grad[i] += a->values[i] * out->grad[i];
                }
            }
        });
    }
    return out;
}

TensorPtr graph_matvec(Tape& tape, const SpectralOperator& op, const TensorPtr& x) {
    if (x->rows() != op.size()) {
        throw Error("graph_matvec: signal rows do not match node count");
    }
    const bool track = track_any(x);
    DenseMatrix xm(x->rows(), x->cols());
    xm.data = x->values;
    DenseMatrix ym = op.matmat(xm);
    TensorPtr out = make_output(x->shape, track);
    out->values = std::move(ym.data);
    if (track) {
        const SpectralOperator* opp = &op;
        tape.record([x, out, opp] {
            DenseMatrix gm(x->rows(), x->cols());
            gm.data = out->grad;
            DenseMatrix gx = opp->matmat(gm);  // symmetric: adjoint = same product
            for (std::size_t i = 0; i < x->size(); ++i) x->grad[i] += gx.data[i];
        });
    }
    return out;
}

TensorPtr log_softmax(Tape& tape, const TensorPtr& x) {
    if (x->shape.size() != 2) throw Error("log_softmax: expects a 2-D tensor");
    const std::size_t n = x->shape[0];
    const std::size_t m = x->shape[1];
    const bool track = track_any(x);
    TensorPtr out = make_output(x->shape, track);
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = x->values.data() + i * m;
        double mx = row[0];
        for (std::size_t j = 1; j < m; ++j) mx = std::max(mx, row[j]);
        double lse = 0.0;
        for (std::size_t j = 0; j < m; ++j) lse += std::exp(row[j] - mx);
        lse = mx + std::log(lse);
        for (std::size_t j = 0; j < m; ++j) out->values[i * m + j] = row[j] - lse;
    }
    if (track) {
        tape.record([x, out, n, m] {
            for (std::size_t i = 0; i < n; ++i) {
                double gsum = 0.0;
                for (std::size_t j = 0; j < m; ++j) gsum += out->grad[i * m + j];
                for (std::size_t j = 0; j < m; ++j) {
                    x->grad[i * m + j] +=
                        out->grad[i * m + j] - std::exp(out->values[i * m + j]) * gsum;
                }
            }
        });
    }
    return out;
}

TensorPtr nll_loss(Tape& tape, const TensorPtr& log_probs, const std::vector<int>& labels,
                   const std::vector<int>& mask) {
    if (log_probs->shape.size() != 2) throw Error("nll_loss: expects 2-D log-probs");
    if (labels.size() != log_probs->shape[0]) {
        throw Error("nll_loss: label count does not match rows");
    }
    if (mask.empty()) throw Error("nll_loss: empty mask");
    const std::size_t m = log_probs->shape[1];
    for (int i : mask) {
        if (i < 0 || static_cast<std::size_t>(i) >= log_probs->shape[0]) {
            throw Error("nll_loss: mask index out of range");
        }
        if (labels[static_cast<std::size_t>(i)] < 0 ||
            static_cast<std::size_t>(labels[static_cast<std::size_t>(i)]) >= m) {
            throw Error("nll_loss: label out of range");
        }
    }
    const bool track = track_any(log_probs);
    TensorPtr out = make_output({1}, track);
    const double inv = 1.0 / static_cast<double>(mask.size());
    double acc = 0.0;
    for (int i : mask) {
        acc -= log_probs->values[static_cast<std::size_t>(i) * m +
                                 static_cast<std::size_t>(labels[i])];
    }
    out->values[0] = acc * inv;
    if (track) {
        auto mask_copy = std::make_shared<std::vector<int>>(mask);
        auto label_copy = std::make_shared<std::vector<int>>(labels);
        tape.record([log_probs, out, mask_copy, label_copy, m, inv] {
            const double g = out->grad[0] * inv;
            for (int i : *mask_copy) {
                log_probs->grad[static_cast<std::size_t>(i) * m +
                                static_cast<std::size_t>((*label_copy)[i])] -= g;
            }
        });
    }
    return out;
}

TensorPtr sum(Tape& tape, const TensorPtr& x) {
    const bool track = track_any(x);
    TensorPtr out = make_output({1}, track);
    double acc = 0.0;
    for (double v : x->values) acc += v;
    out->values[0] = acc;
    if (track) {
        tape.record([x, out] {
            const double g = out->grad[0];
            for (std::size_t i = 0; i < x->size(); ++i) x->grad[i] += g;
        });
    }
    return out;
}

}  // namespace chebfilter::ad
