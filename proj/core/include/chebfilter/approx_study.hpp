#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chebfilter/filter_coefficients.hpp"

namespace chebfilter {

using ScalarFn = std::function<double(double)>;

/// max |f - approx| over a uniform grid of grid_size points on [-1, 1].
/// Grids of odd size hit the endpoints and 0 exactly.
double max_grid_error(const ScalarFn& f, const ScalarFn& approx, std::size_t grid_size);

/// Least-squares slope of log|w_k| against log k over the tail k >= 2 of a
/// Chebyshev series, skipping entries below 1e-14 (rounding noise).
/// Steeper negative means faster decay; a 1/k^q sequence reports -q.
/// Returns nothing when fewer than 5 tail coefficients survive the floor.
std::optional<double> coefficient_decay_rate(const FilterCoefficients& coeffs);

/// One row of an approximation error study.
struct ErrorStudyRow {
    std::string basis;        // chebyshev | lagrange | monomial | bernstein
    std::size_t order = 0;
    double max_error = 0.0;
    std::string node_scheme;  // chebyshev | equispaced
};

/// Approximate `target` with each requested basis at each order, measuring
/// max error on a uniform reference grid. Basis tokens:
///   chebyshev  — interpolation at Chebyshev nodes
///   lagrange   — barycentric interpolation at equispaced nodes
///   monomial   — Vandermonde solve at equispaced nodes
///   bernstein  — Bernstein approximation from equispaced samples
std::vector<ErrorStudyRow> run_error_study(const ScalarFn& target,
                                           const std::vector<std::string>& bases,
                                           const std::vector<std::size_t>& orders,
                                           std::size_t grid_size);

/// Serialize rows with the header "basis,K,max_error,node_scheme".
std::string error_study_csv(const std::vector<ErrorStudyRow>& rows);

/// Named filter functions available to studies: "runge", "step:<tau>",
/// "exp_decay:<a>", "poly:<c0,c1,...>".
ScalarFn make_named_function(const std::string& spec);

}  // namespace chebfilter
