#include "chebfilter/bernstein.hpp"

#include <cmath>
#include <vector>

#include "chebfilter/error.hpp"

namespace chebfilter {

FilterCoefficients bernstein_approximate(const std::function<double(double)>& h,
                                         std::size_t order) {
    if (order < 1) throw Error("bernstein_approximate: order must be >= 1");
    std::vector<double> samples(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        const double x = -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(order);
        samples[k] = h(x);
        if (!std::isfinite(samples[k])) {
            throw Error("bernstein_approximate: non-finite sample");
        }
    }
    return FilterCoefficients(Basis::Bernstein, std::move(samples));
}

}  // namespace chebfilter
