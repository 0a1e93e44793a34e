#pragma once

#include <cstdint>
#include <string>

namespace chebfilter {

enum class ModelKind {
    Mlp,
    Gcn,
    ChebNet,
    ChebBase,
    ChebBaseK,  // coefficient of order k damped by 1/k
    GprGnn,
    BernNet,
    ChebNet2,
};

ModelKind model_kind_from_string(const std::string& name);
const char* model_kind_name(ModelKind kind);

/// Everything a training run needs. Field names match the JSON config
/// schema one-to-one.
struct ModelConfig {
    ModelKind model = ModelKind::ChebNet2;
    int K = 10;                   // propagation order
    int hidden = 64;              // MLP width
    double lr_linear = 0.01;      // learning rate, linear-layer group
    double lr_prop = 0.01;        // learning rate, propagation-coefficient group
    double wd_linear = 5e-4;      // weight decay, linear group
    double wd_prop = 5e-4;        // weight decay, propagation group
    double dropout_linear = 0.5;
    double dropout_prop = 0.5;
    int epochs = 1000;            // maximum epochs
    int patience = 200;           // early-stopping window on validation accuracy
    std::uint64_t seed = 0;
    bool extra_linear_after_prop = false;
    double alpha = 0.1;           // gprgnn restart weight for the PPR init
    bool halve_first_coeff = true;  // chebnet2 interpolation convention

    bool uses_propagation() const {
        return model != ModelKind::Mlp && model != ModelKind::Gcn;
    }
    /// Scalar-coefficient models: the ones with a second optimizer group.
    bool has_coefficient_group() const {
        switch (model) {
            case ModelKind::ChebBase:
            case ModelKind::ChebBaseK:
            case ModelKind::GprGnn:
            case ModelKind::BernNet:
            case ModelKind::ChebNet2: return true;
            default: return false;
        }
    }

    void validate() const;
};

/// Per-model baseline defaults (width/order conventions the training
/// protocol uses when a config file does not override them).
ModelConfig default_model_config(ModelKind kind);

/// Parse a JSON config object; starts from default_model_config of the
/// "model" field and overlays the remaining keys. Unknown keys are errors.
ModelConfig model_config_from_json_text(const std::string& text);
ModelConfig load_model_config(const std::string& path);
std::string model_config_to_json_text(const ModelConfig& config);

}  // namespace chebfilter
