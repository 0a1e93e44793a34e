#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chebfilter/dataset.hpp"
#include "chebfilter/model_config.hpp"
#include "chebfilter/models.hpp"
#include "chebfilter/spectral_filter.hpp"

namespace chebfilter {

enum class SplitRegime {
    Standard,  // 20 train nodes per class, 500 validation, 1000 test
    Sparse,    // 2.5% / 2.5% / 95%
    Full,      // 60% / 20% / 20%
};

SplitRegime split_regime_from_string(const std::string& name);
const char* split_regime_name(SplitRegime regime);

/// Pairwise-disjoint node index sets.
struct Split {
    std::vector<int> train;
    std::vector<int> val;
    std::vector<int> test;

    bool operator==(const Split& other) const = default;
};

/// Deterministic per seed. The standard regime stratifies its train
/// portion by class and needs 20 nodes per class plus 1500 more.
Split make_split(const Dataset& dataset, SplitRegime regime, std::uint64_t seed);

/// JSON schema: {"train": [ids], "val": [ids], "test": [ids]}.
Split split_from_json_text(const std::string& text);
Split load_split(const std::string& path);
std::string split_to_json_text(const Split& split);

/// Fraction of masked nodes whose argmax logit matches the label.
/// (Micro-F1 reduces to this for single-label nodes.) Empty mask is an
/// error; argmax ties resolve to the lowest class index.
double accuracy(const ad::Tensor& logits, const std::vector<int>& labels,
                const std::vector<int>& mask);

struct TrainReport {
    std::vector<double> train_loss;    // per epoch
    std::vector<double> val_accuracy;  // per epoch
    int best_epoch = 0;
    double best_val_accuracy = 0.0;
    double test_accuracy = 0.0;        // at the best-validation checkpoint
    SampledFilter filter;              // learned filter, when the model has one
    double wall_seconds = 0.0;
    int epochs_run = 0;
};

/// Full-batch training with Adam over two parameter groups (linear layers
/// vs propagation coefficients) and early stopping on validation accuracy,
/// ties broken by lower validation loss. Deterministic per config seed;
/// the tape and tensors stay confined to this run.
TrainReport train(const Dataset& dataset, const Split& split, const ModelConfig& config);

/// Variant that leaves the trained model accessible (for checkpointing).
TrainReport train(const Dataset& dataset, const Split& split, const ModelConfig& config,
                  Model& model_out);

struct RepeatSummary {
    std::vector<double> test_accuracies;  // in seed order
    double mean = 0.0;
    double ci95 = 0.0;  // normal-approximation half-width; 0 for a single run
    std::vector<TrainReport> reports;
};

/// Run `runs` independent seeds (base seed, base+1, ...), each with a
/// fresh split and fresh initialization. Runs may execute on up to `jobs`
/// threads; results aggregate in seed order either way.
RepeatSummary repeat_runs(const Dataset& dataset, SplitRegime regime,
                          const ModelConfig& config, int runs, int jobs = 1);

}  // namespace chebfilter
