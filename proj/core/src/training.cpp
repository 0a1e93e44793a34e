#include "chebfilter/training.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "chebfilter/adam.hpp"
#include "chebfilter/error.hpp"
#include "chebfilter/rng.hpp"

namespace chebfilter {

using nlohmann::json;

SplitRegime split_regime_from_string(const std::string& name) {
    if (name == "standard") return SplitRegime::Standard;
    if (name == "sparse") return SplitRegime::Sparse;
    if (name == "full") return SplitRegime::Full;
    throw Error("unknown split regime '" + name + "'");
}

const char* split_regime_name(SplitRegime regime) {
    switch (regime) {
        case SplitRegime::Standard: return "standard";
        case SplitRegime::Sparse: return "sparse";
        case SplitRegime::Full: return "full";
    }
    return "unknown";
}

Split make_split(const Dataset& dataset, SplitRegime regime, std::uint64_t seed) {
    const std::size_t n = dataset.graph.n;
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0x5917ULL);
    Split split;

    if (regime == SplitRegime::Standard) {
        constexpr std::size_t kPerClass = 20;
        constexpr std::size_t kVal = 500;
        constexpr std::size_t kTest = 1000;
        std::vector<std::vector<int>> by_class(static_cast<std::size_t>(dataset.num_classes));
        for (std::size_t v = 0; v < n; ++v) {
            by_class[static_cast<std::size_t>(dataset.labels[v])].push_back(
                static_cast<int>(v));
        }
        const std::size_t need =
            kPerClass * static_cast<std::size_t>(dataset.num_classes) + kVal + kTest;
        if (n < need) {
            throw Error("make_split: standard regime needs " + std::to_string(need) +
                        " nodes, dataset has " + std::to_string(n));
        }
        std::vector<char> taken(n, 0);
        for (auto& bucket : by_class) {
            if (bucket.size() < kPerClass) {
                throw Error("make_split: a class has fewer than 20 nodes");
            }
            rng.shuffle(bucket);
            for (std::size_t i = 0; i < kPerClass; ++i) {
                split.train.push_back(bucket[i]);
                taken[static_cast<std::size_t>(bucket[i])] = 1;
            }
        }
        std::sort(split.train.begin(), split.train.end());
        std::vector<int> rest;
        rest.reserve(n);
        for (std::size_t v = 0; v < n; ++v) {
            if (!taken[v]) rest.push_back(static_cast<int>(v));
        }
        rng.shuffle(rest);
        split.val.assign(rest.begin(), rest.begin() + kVal);
        split.test.assign(rest.begin() + kVal, rest.begin() + kVal + kTest);
    } else {
        const double train_frac = regime == SplitRegime::Sparse ? 0.025 : 0.60;
        const double val_frac = regime == SplitRegime::Sparse ? 0.025 : 0.20;
        std::vector<int> ids(n);
        for (std::size_t v = 0; v < n; ++v) ids[v] = static_cast<int>(v);
        rng.shuffle(ids);
        const std::size_t n_train =
            static_cast<std::size_t>(std::llround(train_frac * static_cast<double>(n)));
        const std::size_t n_val =
            static_cast<std::size_t>(std::llround(val_frac * static_cast<double>(n)));
        if (n_train == 0 || n_val == 0 || n_train + n_val >= n) {
            throw Error("make_split: dataset too small for the requested regime");
        }
        split.train.assign(ids.begin(), ids.begin() + n_train);
        split.val.assign(ids.begin() + n_train, ids.begin() + n_train + n_val);
        split.test.assign(ids.begin() + n_train + n_val, ids.end());
    }
    return split;
}

Split split_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw IoError(std::string("split: invalid JSON: ") + e.what());
    }
    Split split;
    try {
        split.train = j.at("train").get<std::vector<int>>();
        split.val = j.at("val").get<std::vector<int>>();
        split.test = j.at("test").get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw IoError(std::string("split: expected train/val/test arrays: ") + e.what());
    }
    return split;
}

Split load_split(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open split file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return split_from_json_text(buf.str());
}

std::string split_to_json_text(const Split& split) {
    json j;
    j["train"] = split.train;
    j["val"] = split.val;
    j["test"] = split.test;
    return j.dump();
}

double accuracy(const ad::Tensor& logits, const std::vector<int>& labels,
                const std::vector<int>& mask) {
    if (mask.empty()) throw Error("accuracy: empty mask");
    const std::size_t c = logits.cols();
    std::size_t hits = 0;
    for (int i : mask) {
        const double* row = logits.values.data() + static_cast<std::size_t>(i) * c;
        std::size_t arg = 0;
        for (std::size_t j = 1; j < c; ++j) {
            if (row[j] > row[arg]) arg = j;
        }
        if (static_cast<int>(arg) == labels[static_cast<std::size_t>(i)]) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(mask.size());
}

namespace {

void validate_split(const Dataset& dataset, const Split& split) {
    if (split.train.empty()) throw Error("train: empty train set");
    if (split.val.empty()) throw Error("train: empty validation set");
    if (split.test.empty()) throw Error("train: empty test set");
    std::vector<char> seen(dataset.graph.n, 0);
    for (const auto* part : {&split.train, &split.val, &split.test}) {
        for (int i : *part) {
            if (i < 0 || static_cast<std::size_t>(i) >= dataset.graph.n) {
                throw Error("train: split index out of range");
            }
            if (seen[static_cast<std::size_t>(i)]++) {
                throw Error("train: split parts are not disjoint");
            }
        }
    }
}

double masked_nll(const ad::Tensor& logp, const std::vector<int>& labels,
                  const std::vector<int>& mask) {
    const std::size_t c = logp.cols();
    double acc = 0.0;
    for (int i : mask) {
        acc -= logp.values[static_cast<std::size_t>(i) * c +
                           static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])];
    }
    return acc / static_cast<double>(mask.size());
}

}  // namespace

TrainReport train(const Dataset& dataset, const Split& split, const ModelConfig& config,
                  Model& model) {
    const auto t0 = std::chrono::steady_clock::now();
    config.validate();
    validate_split(dataset, split);

    Rng dropout_rng(config.seed * 0x9e3779b97f4a7c15ULL + 0xd506);

    std::vector<AdamGroup> groups;
    groups.push_back({model.linear_params(), config.lr_linear, config.wd_linear});
    const auto prop = model.prop_params();
    if (!prop.empty()) {
        groups.push_back({prop, config.lr_prop, config.wd_prop});
    }
    AdamState opt(std::move(groups));

    TrainReport report;
    double best_acc = -1.0;
    double best_loss = std::numeric_limits<double>::infinity();
    std::vector<double> best_snapshot = model.snapshot();
    int wait = 0;

    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        ad::Tape tape;
        ad::TensorPtr logits = model.forward(tape, dropout_rng, true);
        ad::TensorPtr logp = ad::log_softmax(tape, logits);
        ad::TensorPtr loss = ad::nll_loss(tape, logp, dataset.labels, split.train);
        if (!std::isfinite(loss->values[0])) {
            throw Error("train: loss diverged (non-finite) at epoch " +
                        std::to_string(epoch));
        }
        report.train_loss.push_back(loss->values[0]);
        tape.backward(loss);
        adam_step(opt);

        ad::Tape eval_tape;
        ad::TensorPtr eval_logits = model.forward(eval_tape, dropout_rng, false);
        ad::Tape lp_tape;
        ad::TensorPtr eval_logp = ad::log_softmax(lp_tape, eval_logits);
        const double val_acc = accuracy(*eval_logits, dataset.labels, split.val);
        const double val_loss = masked_nll(*eval_logp, dataset.labels, split.val);
        report.val_accuracy.push_back(val_acc);

        const bool improved =
            val_acc > best_acc || (val_acc == best_acc && val_loss < best_loss);
        if (improved) {
            best_acc = val_acc;
            best_loss = val_loss;
            best_snapshot = model.snapshot();
            report.best_epoch = epoch;
            wait = 0;
        } else {
            ++wait;
            if (wait >= config.patience && wait >= 1) break;
        }
    }
    report.epochs_run = static_cast<int>(report.train_loss.size());
    report.best_val_accuracy = best_acc;

    model.restore(best_snapshot);
    ad::Tape final_tape;
    Rng unused_rng(0);
    ad::TensorPtr final_logits = model.forward(final_tape, unused_rng, false);
    report.test_accuracy = accuracy(*final_logits, dataset.labels, split.test);
    report.filter = model.sample_filter(201);

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

TrainReport train(const Dataset& dataset, const Split& split, const ModelConfig& config) {
    Model model(dataset, config);
    return train(dataset, split, config, model);
}

RepeatSummary repeat_runs(const Dataset& dataset, SplitRegime regime,
                          const ModelConfig& config, int runs, int jobs) {
    if (runs < 1) throw Error("repeat_runs: runs must be >= 1");
    RepeatSummary summary;
    summary.reports.resize(static_cast<std::size_t>(runs));
    summary.test_accuracies.resize(static_cast<std::size_t>(runs));

    auto run_one = [&](int r) {
        ModelConfig cfg = config;
        cfg.seed = config.seed + static_cast<std::uint64_t>(r);
        const Split split = make_split(dataset, regime, cfg.seed);
        summary.reports[static_cast<std::size_t>(r)] = train(dataset, split, cfg);
        summary.test_accuracies[static_cast<std::size_t>(r)] =
            summary.reports[static_cast<std::size_t>(r)].test_accuracy;
    };

    const int workers = std::max(1, std::min(jobs, runs));
    if (workers == 1) {
        for (int r = 0; r < runs; ++r) run_one(r);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (int r = next.fetch_add(1); r < runs; r = next.fetch_add(1)) run_one(r);
            });
        }
        for (auto& th : pool) th.join();
    }

    double mean = 0.0;
    for (double a : summary.test_accuracies) mean += a;
    mean /= static_cast<double>(runs);
    summary.mean = mean;
    if (runs > 1) {
        double var = 0.0;
        for (double a : summary.test_accuracies) var += (a - mean) * (a - mean);
        var /= static_cast<double>(runs - 1);
        summary.ci95 = 1.96 * std::sqrt(var / static_cast<double>(runs));
    }
    return summary;
}

}  // namespace chebfilter
