#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chebfilter/autodiff.hpp"
#include "chebfilter/dataset.hpp"
#include "chebfilter/model_config.hpp"
#include "chebfilter/spectral_filter.hpp"

namespace chebfilter {

/// A node-classification model: parameters, the propagation operator it
/// needs, and a forward pass producing per-node logits.
///
/// All variants share the decoupled recipe where it applies: a two-layer
/// MLP on the features followed by polynomial propagation with explicit
/// scalar coefficients. gcn/chebnet instead learn per-order weight
/// matrices inside their convolution layers, and mlp skips propagation.
///
/// The dataset must outlive the model (operators view its graph).
class Model {
public:
    Model(const Dataset& dataset, const ModelConfig& config);

    /// Per-node logits (n x C). Records on the tape; dropout draws from
    /// the caller's stream (identity when not training).
    ad::TensorPtr forward(ad::Tape& tape, Rng& dropout_rng, bool training) const;

    const ModelConfig& config() const { return cfg_; }
    const std::vector<std::pair<std::string, ad::TensorPtr>>& named_params() const {
        return params_;
    }
    std::vector<ad::TensorPtr> linear_params() const;
    std::vector<ad::TensorPtr> prop_params() const;
    std::size_t param_count() const;

    /// The polynomial filter currently encoded by the scalar coefficients.
    /// Models without scalar coefficients (mlp, gcn, chebnet) have none.
    std::optional<FilterCoefficients> implied_coefficients() const;

    /// implied_coefficients sampled on a uniform grid; empty if none.
    SampledFilter sample_filter(std::size_t grid) const;

    /// Checkpoint: JSON object {name: {shape, values}}, keys sorted.
    std::string state_to_json() const;
    void load_state_from_json(const std::string& text);

    std::vector<double> snapshot() const;
    void restore(const std::vector<double>& snap);

private:
    const Dataset* dataset_;
    ModelConfig cfg_;
    std::optional<SpectralOperator> prop_op_;
    ad::TensorPtr features_;
    std::vector<std::pair<std::string, ad::TensorPtr>> params_;
    std::vector<bool> is_prop_param_;
    ad::TensorPtr coeff_transform_;  // chebnet2: node-values -> series weights

    ad::TensorPtr param(const std::string& name) const;
    ad::TensorPtr mlp_tower(ad::Tape& tape, Rng& rng, bool training, const char* prefix,
                            std::size_t out_width) const;
};

}  // namespace chebfilter
