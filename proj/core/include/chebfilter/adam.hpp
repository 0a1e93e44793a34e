#pragma once

#include <vector>

#include "chebfilter/autodiff.hpp"

namespace chebfilter {

/// One Adam parameter group: shared learning rate and L2 strength.
struct AdamGroup {
    std::vector<ad::TensorPtr> params;
    double lr = 0.01;
    double weight_decay = 0.0;
};

/// Adam with bias correction and per-group hyperparameters. Weight decay
/// enters as an additive L2 term on the gradient. adam_step consumes the
/// gradients: it applies the update and clears them.
class AdamState {
public:
    AdamState(std::vector<AdamGroup> groups, double beta1 = 0.9, double beta2 = 0.999,
              double epsilon = 1e-8);

    void step();

    long step_count() const { return step_; }

private:
    struct Slot {
        std::vector<double> m;
        std::vector<double> v;
    };
    std::vector<AdamGroup> groups_;
    std::vector<std::vector<Slot>> moments_;
    double beta1_;
    double beta2_;
    double epsilon_;
    long step_ = 0;
};

inline void adam_step(AdamState& state) { state.step(); }

}  // namespace chebfilter
