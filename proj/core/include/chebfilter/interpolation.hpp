#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "chebfilter/filter_coefficients.hpp"

namespace chebfilter {

/// Barycentric Lagrange interpolant through pairwise-distinct nodes.
/// The barycentric form stays stable at orders where the textbook product
/// form has long since fallen apart.
class BarycentricInterpolant {
public:
    BarycentricInterpolant(std::vector<double> nodes, std::vector<double> values);

    double operator()(double x) const;

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> nodes_;
    std::vector<double> values_;
    std::vector<double> weights_;
};

/// Evaluate at x the polynomial interpolating h at the given nodes.
double lagrange_interpolate(const std::function<double(double)>& h,
                            const std::vector<double>& nodes, double x);

/// K+1 equispaced nodes on [-1, 1] (endpoints included for K >= 1).
std::vector<double> equispaced_nodes(std::size_t order);

/// Monomial coefficients of the interpolant through the nodes, obtained by
/// Gaussian elimination with partial pivoting on the associated Vandermonde
/// system. Capped at order 30: past that the system is too ill-conditioned
/// to mean anything in double precision.
FilterCoefficients vandermonde_interpolate(const std::function<double(double)>& h,
                                           const std::vector<double>& nodes);

inline constexpr std::size_t kVandermondeMaxOrder = 30;

}  // namespace chebfilter
