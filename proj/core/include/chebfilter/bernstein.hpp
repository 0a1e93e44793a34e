#pragma once

#include <cstddef>
#include <functional>

#include "chebfilter/filter_coefficients.hpp"

namespace chebfilter {

/// Degree-K Bernstein approximant of h on [-1, 1]: the basis is weighted by
/// the samples h(-1 + 2k/K), so the weights stored in the result are exactly
/// those samples. Reproduces constants and linear functions exactly and
/// interpolates h at both endpoints.
FilterCoefficients bernstein_approximate(const std::function<double(double)>& h,
                                         std::size_t order);

}  // namespace chebfilter
