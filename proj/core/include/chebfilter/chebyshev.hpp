#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "chebfilter/filter_coefficients.hpp"

namespace chebfilter {

/// Chebyshev polynomial T_k(x) for x in [-1, 1], by the three-term
/// recurrence T_k = 2x T_{k-1} - T_{k-2}, T_0 = 1, T_1 = x. Agrees with
/// the closed form cos(k arccos x) to ~1e-10 through k = 50.
/// |x| > 1 is rejected: the toolkit works on the filter domain only.
double chebyshev_t(std::size_t k, double x);

/// The K+1 zeros of T_{K+1}: x_j = cos((j + 1/2) pi / (K+1)), j = 0..K.
/// Stored in j order, which is strictly decreasing in x.
struct ChebyshevNodes {
    std::size_t order = 0;       // K
    std::vector<double> nodes;   // x_0 > x_1 > ... > x_K, all in (-1, 1)
};

ChebyshevNodes cheb_nodes(std::size_t order);

/// Interpolate h at the order-K Chebyshev nodes and return the Chebyshev
/// series of the unique degree-<=K interpolant:
///   w_k = (2/(K+1)) sum_j h(x_j) T_k(x_j),   with w_0 halved.
/// The result reproduces h exactly at every node (up to rounding).
FilterCoefficients cheb_interpolate(const std::function<double(double)>& h, std::size_t order);

/// Series weights of the interpolant through prescribed node values;
/// node_values[j] plays the role of h(x_j). Same transform as
/// cheb_interpolate, with the first-coefficient halving optional so both
/// published conventions of the transform are reachable.
std::vector<double> cheb_interpolation_weights(const std::vector<double>& node_values,
                                               bool halve_first = true);

/// Evaluate a Chebyshev series at x (Clenshaw). Equivalent to
/// evaluate(coeffs, x) for a Chebyshev-basis filter; kept as a named entry
/// point because callers often hold raw weights.
double eval_cheb_series(const FilterCoefficients& coeffs, double x);

}  // namespace chebfilter
