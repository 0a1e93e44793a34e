#include "chebfilter/adam.hpp"

#include <cmath>

#include "chebfilter/error.hpp"

namespace chebfilter {

AdamState::AdamState(std::vector<AdamGroup> groups, double beta1, double beta2,
                     double epsilon)
    : groups_(std::move(groups)), beta1_(beta1), beta2_(beta2), epsilon_(epsilon) {
    moments_.resize(groups_.size());
    for (std::size_t g = 0; g < groups_.size(); ++g) {
        moments_[g].resize(groups_[g].params.size());
        for (std::size_t p = 0; p < groups_[g].params.size(); ++p) {
            const std::size_t size = groups_[g].params[p]->size();
            moments_[g][p].m.assign(size, 0.0);
            moments_[g][p].v.assign(size, 0.0);
        }
    }
}

void AdamState::step() {
    ++step_;
    const double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(step_));
    const double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(step_));
    for (std::size_t g = 0; g < groups_.size(); ++g) {
        AdamGroup& group = groups_[g];
        for (std::size_t p = 0; p < group.params.size(); ++p) {
            ad::Tensor& t = *group.params[p];
            if (t.grad.size() != t.values.size()) {
                throw Error("adam: parameter has no gradient; run backward first");
            }
            Slot& slot = moments_[g][p];
            for (std::size_t i = 0; i < t.values.size(); ++i) {
                const double grad = t.grad[i] + group.weight_decay * t.values[i];
                slot.m[i] = beta1_ * slot.m[i] + (1.0 - beta1_) * grad;
                slot.v[i] = beta2_ * slot.v[i] + (1.0 - beta2_) * grad * grad;
                const double mhat = slot.m[i] / bc1;
                const double vhat = slot.v[i] / bc2;
                t.values[i] -= group.lr * mhat / (std::sqrt(vhat) + epsilon_);
            }
            t.zero_grad();
        }
    }
}

}  // namespace chebfilter
