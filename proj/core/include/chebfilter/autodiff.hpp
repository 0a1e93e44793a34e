#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "chebfilter/operators.hpp"
#include "chebfilter/rng.hpp"

namespace chebfilter::ad {

/// Dense tensor with an attached gradient slot. Values are treated as
/// immutable while a tape that references them is alive; parameters are
/// updated between tapes.
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> values;
    std::vector<double> grad;  // same length as values once touched by backward
    bool requires_grad = false;

    std::size_t size() const { return values.size(); }
    std::size_t rows() const { return shape.empty() ? 0 : shape[0]; }
    std::size_t cols() const { return shape.size() < 2 ? 1 : shape[1]; }

    void ensure_grad() {
        if (grad.size() != values.size()) grad.assign(values.size(), 0.0);
    }
    void zero_grad() { std::fill(grad.begin(), grad.end(), 0.0); }
};

using TensorPtr = std::shared_ptr<Tensor>;

TensorPtr make_tensor(std::vector<std::size_t> shape);
TensorPtr make_tensor(std::vector<std::size_t> shape, std::vector<double> values);
/// A leaf that wants gradients.
TensorPtr make_param(std::vector<std::size_t> shape);

/// Record of one forward execution. Operations push their backward
/// closures in execution order, which is a valid topological order, so the
/// backward pass is a single reverse sweep visiting each node exactly once.
/// A tape and its tensors belong to one training run; it is not shared
/// across threads.
class Tape {
public:
    void record(std::function<void()> backward_fn) {
        nodes_.push_back(std::move(backward_fn));
    }

    /// Populate grad on every reachable tensor that requires it.
    /// loss must be a scalar recorded on this tape. A tape can be walked
    /// once; re-running backward without re-executing forward is an error.
    void backward(const TensorPtr& loss);

    std::size_t node_count() const { return nodes_.size(); }

private:
    std::vector<std::function<void()>> nodes_;
    bool consumed_ = false;
};

// Forward operations. Each records itself on the tape when any input
// requires a gradient; shape mismatches raise errors.

TensorPtr matmul(Tape& tape, const TensorPtr& a, const TensorPtr& b);
/// x (n x m) + bias broadcast over rows (length m).
TensorPtr add_bias(Tape& tape, const TensorPtr& x, const TensorPtr& bias);
TensorPtr relu(Tape& tape, const TensorPtr& x);
/// Inverted dropout: identity when not training, otherwise keeps entries
/// with probability 1-p and rescales by 1/(1-p) so the expectation is
/// preserved. Mask drawn from the caller's seeded stream.
TensorPtr dropout(Tape& tape, const TensorPtr& x, double p, Rng& rng, bool training);
/// Constant scalar multiply.
TensorPtr scale(Tape& tape, const TensorPtr& x, double c);
/// Multiply by the k-th entry of a coefficient tensor (gradient flows to
/// both the signal and the coefficient).
TensorPtr index_scale(Tape& tape, const TensorPtr& x, const TensorPtr& coeffs,
                      std::size_t k);
TensorPtr elementwise_add(Tape& tape, const TensorPtr& a, const TensorPtr& b);
TensorPtr elementwise_sub(Tape& tape, const TensorPtr& a, const TensorPtr& b);
TensorPtr elementwise_mul(Tape& tape, const TensorPtr& a, const TensorPtr& b);
/// Sparse operator applied to each column of x. The operator must outlive
/// the tape (backward reuses it; symmetry makes the adjoint the same
/// product).
TensorPtr graph_matvec(Tape& tape, const SpectralOperator& op, const TensorPtr& x);
/// Row-wise log softmax.
TensorPtr log_softmax(Tape& tape, const TensorPtr& x);
/// Mean negative log-likelihood of the true class over the masked rows.
TensorPtr nll_loss(Tape& tape, const TensorPtr& log_probs, const std::vector<int>& labels,
                   const std::vector<int>& mask);
TensorPtr sum(Tape& tape, const TensorPtr& x);

}  // namespace chebfilter::ad
