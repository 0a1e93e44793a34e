#pragma once

#include <functional>
#include <vector>

#include "chebfilter/dense.hpp"
#include "chebfilter/eigen.hpp"
#include "chebfilter/filter_coefficients.hpp"
#include "chebfilter/operators.hpp"

namespace chebfilter {

/// A filter sampled on explicit spectral points: responses[i] applies to
/// lambdas[i]. Per-index semantics, so degenerate eigenvalues may carry
/// distinct responses when the filter was recovered index-wise.
struct SampledFilter {
    std::vector<double> lambdas;
    std::vector<double> responses;
};

/// Apply a Chebyshev-series filter to a signal using only sparse products:
/// y = sum_k w_k t_k with t_0 = x, t_1 = Mx, t_k = 2M t_{k-1} - t_{k-2}.
/// Costs K operator applications and no eigendecomposition. The operator
/// must be a scaled Laplacian (spectrum inside [-1, 1]).
std::vector<double> apply_cheb_filter(const SpectralOperator& op,
                                      const FilterCoefficients& coeffs,
                                      const std::vector<double>& x);

/// Multi-channel variant: each column filtered independently.
DenseMatrix apply_cheb_filter(const SpectralOperator& op, const FilterCoefficients& coeffs,
                              const DenseMatrix& x);

/// Exact spectral filtering y = U diag(h(lambda_i)) U^T x.
std::vector<double> apply_exact_filter(const EigenDecomposition& eig,
                                       const std::function<double(double)>& h,
                                       const std::vector<double>& x);

/// Exact filtering with per-index sampled responses.
std::vector<double> apply_sampled_filter(const EigenDecomposition& eig,
                                         const SampledFilter& filter,
                                         const std::vector<double>& x);

/// Indicator filter passing eigenvalues within tol of target: 1 inside the
/// band, 0 outside. The discrete-spectrum realization of an impulse filter;
/// target 0 is low-pass, 2 high-pass, 1 band-pass on a Laplacian spectrum.
std::function<double(double)> impulse_filter(double target, double tol = 1e-6);

/// Solve for the per-index responses that map signal x onto the +/-1 label
/// vector y: h_i = (U^T y)_i / (U^T x)_i. Requires every spectral
/// coefficient of x to clear epsilon; the failing index is named otherwise.
/// Applying the result through apply_sampled_filter reproduces y.
SampledFilter recover_perfect_filter(const EigenDecomposition& eig,
                                     const std::vector<double>& x,
                                     const std::vector<double>& y, double epsilon = 1e-8);

/// Responses of a polynomial filter on a uniform grid over its natural
/// domain: [-1, 1] for Chebyshev/monomial series, [0, 2] for a Bernstein
/// filter over the Laplacian spectrum. grid >= 2; endpoints included.
SampledFilter sample_filter_response(const FilterCoefficients& coeffs, std::size_t grid);

/// CSV with header "lambda,response".
std::string sampled_filter_csv(const SampledFilter& filter);

}  // namespace chebfilter
