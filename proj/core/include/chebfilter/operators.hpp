#pragma once

#include <span>
#include <vector>

#include "chebfilter/dense.hpp"
#include "chebfilter/graph.hpp"

namespace chebfilter {

enum class OperatorKind {
    NormalizedLaplacian,    // L = I - D^{-1/2} A D^{-1/2},  spectrum in [0, 2]
    ScaledLaplacian,        // (2/lambda_max) L - I,          spectrum in [-1, 1]
    RenormalizedAdjacency,  // (D+I)^{-1/2} (A+I) (D+I)^{-1/2}, spectrum in (-1, 1]
};

/// Symmetric sparse operator view over a graph. Holds a pointer to the
/// graph, not a copy: the graph must outlive the operator. Isolated nodes
/// use the inverse-sqrt-degree = 0 convention, so operators containing an
/// identity term pass their signals through unchanged.
///
/// Immutable after construction; matvec is pure and safe for concurrent
/// callers. Set CHEBFILTER_THREADS > 1 to split multi-column products over
/// row blocks (each output row is owned by one thread, so results do not
/// depend on the thread count).
class SpectralOperator {
public:
    SpectralOperator(const Graph& graph, OperatorKind kind, double lambda_max = 2.0);

    void matvec(std::span<const double> x, std::span<double> y) const;
    std::vector<double> matvec(const std::vector<double>& x) const;

    /// Y = M X, applied to each column of the n-by-d signal matrix.
    DenseMatrix matmat(const DenseMatrix& x) const;

    /// Dense realization, used by the eigensolver and by demos; quadratic
    /// memory, keep to small n.
    DenseMatrix to_dense() const;

    std::size_t size() const { return graph_->n; }
    OperatorKind kind() const { return kind_; }
    double lambda_max() const { return lambda_max_; }
    const Graph& graph() const { return *graph_; }
    const std::vector<double>& inv_sqrt_deg() const { return inv_sqrt_deg_; }

    /// Natural spectral interval of this operator, for labeling samples.
    double spectrum_lo() const;
    double spectrum_hi() const;

private:
    const Graph* graph_;
    OperatorKind kind_;
    double lambda_max_;
    std::vector<double> inv_sqrt_deg_;

    void laplacian_matvec(std::span<const double> x, std::span<double> y) const;
};

SpectralOperator build_operator(const Graph& graph, OperatorKind kind,
                                double lambda_max = 2.0);

/// Largest eigenvalue of the normalized Laplacian via power iteration on
/// L + I (the shift keeps the dominant eigenvalue simple-signed). Returns a
/// value in [lambda_max - tol, min(lambda_max + tol, 2)], i.e. safe to use
/// as the scaling bound. A graph with no edges reports 0.
double estimate_lambda_max(const SpectralOperator& op, std::size_t iters, double tol);

/// Thread cap from CHEBFILTER_THREADS (default 1), read once per process.
unsigned internal_thread_cap();

}  // namespace chebfilter
