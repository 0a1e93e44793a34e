#include "chebfilter/filter_coefficients.hpp"

#include <cmath>

#include "chebfilter/error.hpp"

namespace chebfilter {

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::Chebyshev: return "chebyshev";
        case Basis::Monomial: return "monomial";
        case Basis::Bernstein: return "bernstein";
    }
    return "unknown";
}

FilterCoefficients::FilterCoefficients(Basis b, std::vector<double> w)
    : basis(b), order(w.empty() ? 0 : w.size() - 1), weights(std::move(w)) {
    validate();
}

void FilterCoefficients::validate() const {
    if (weights.size() != order + 1) {
        throw Error("filter coefficients: weights length must be order+1");
    }
    for (double w : weights) {
        if (!std::isfinite(w)) throw Error("filter coefficients: non-finite weight");
    }
}

namespace {

double clenshaw(const std::vector<double>& w, double x) {
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t i = w.size(); i-- > 1;) {
        const double b0 = w[i] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return w[0] + x * b1 - b2;
}

double horner(const std::vector<double>& w, double x) {
    double acc = 0.0;
    for (std::size_t i = w.size(); i-- > 0;) acc = acc * x + w[i];
    return acc;
}

double de_casteljau(const std::vector<double>& w, double x) {
    const double t = 0.5 * (x + 1.0);  // map [-1,1] -> [0,1]
    std::vector<double> b = w;
    for (std::size_t level = 1; level < w.size(); ++level) {
        for (std::size_t i = 0; i + level < w.size(); ++i) {
            b[i] = (1.0 - t) * b[i] + t * b[i + 1];
        }
    }
    return b.empty() ? 0.0 : b[0];
}

}  // namespace

double evaluate(const FilterCoefficients& coeffs, double x) {
    if (std::abs(x) > 1.0) throw Error("filter evaluation: x outside [-1, 1]");
    coeffs.validate();
    switch (coeffs.basis) {
        case Basis::Chebyshev: return clenshaw(coeffs.weights, x);
        case Basis::Monomial: return horner(coeffs.weights, x);
        case Basis::Bernstein: return de_casteljau(coeffs.weights, x);
    }
    throw Error("filter evaluation: unknown basis");
}

}  // namespace chebfilter
