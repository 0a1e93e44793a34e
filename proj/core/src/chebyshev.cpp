#include "chebfilter/chebyshev.hpp"

#include <cmath>

#include "chebfilter/error.hpp"

namespace chebfilter {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double chebyshev_t(std::size_t k, double x) {
    if (std::abs(x) > 1.0) throw Error("chebyshev_t: x outside [-1, 1]");
    if (k == 0) return 1.0;
    if (k == 1) return x;
    double tkm2 = 1.0;
    double tkm1 = x;
    double tk = x;
    for (std::size_t i = 2; i <= k; ++i) {
        tk = 2.0 * x * tkm1 - tkm2;
        tkm2 = tkm1;
        tkm1 = tk;
    }
    return tk;
}

ChebyshevNodes cheb_nodes(std::size_t order) {
    ChebyshevNodes out;
    out.order = order;
    out.nodes.resize(order + 1);
    const double denom = static_cast<double>(order + 1);
    for (std::size_t j = 0; j <= order; ++j) {
        out.nodes[j] = std::cos((static_cast<double>(j) + 0.5) * kPi / denom);
    }
    return out;
}

std::vector<double> cheb_interpolation_weights(const std::vector<double>& node_values,
                                               bool halve_first) {
    if (node_values.empty()) throw Error("cheb interpolation: no node values");
    const std::size_t count = node_values.size();  // K+1
    const double denom = static_cast<double>(count);
    std::vector<double> w(count, 0.0);
    for (std::size_t k = 0; k < count; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j < count; ++j) {
            // T_k at the node x_j = cos(theta_j) is cos(k theta_j) exactly.
            const double theta = (static_cast<double>(j) + 0.5) * kPi / denom;
            acc += node_values[j] * std::cos(static_cast<double>(k) * theta);
        }
        w[k] = 2.0 / denom * acc;
    }
    if (halve_first) w[0] *= 0.5;
    return w;
}

FilterCoefficients cheb_interpolate(const std::function<double(double)>& h, std::size_t order) {
    const ChebyshevNodes nodes = cheb_nodes(order);
    std::vector<double> values(nodes.nodes.size());
    for (std::size_t j = 0; j < nodes.nodes.size(); ++j) {
        values[j] = h(nodes.nodes[j]);
        if (!std::isfinite(values[j])) {
            throw Error("cheb_interpolate: non-finite function value at node " +
                        std::to_string(j));
        }
    }
    return FilterCoefficients(Basis::Chebyshev, cheb_interpolation_weights(values));
}

double eval_cheb_series(const FilterCoefficients& coeffs, double x) {
    if (coeffs.basis != Basis::Chebyshev) {
        throw Error("eval_cheb_series: coefficients are not a Chebyshev series");
    }
    return evaluate(coeffs, x);
}

}  // namespace chebfilter
