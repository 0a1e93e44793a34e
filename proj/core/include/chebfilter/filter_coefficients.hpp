#pragma once

#include <cstddef>
#include <vector>

namespace chebfilter {

enum class Basis { Chebyshev, Monomial, Bernstein };

const char* basis_name(Basis b);

/// A polynomial spectral filter: a basis, an order K and K+1 weights.
///
/// Weight semantics per basis, for x in [-1, 1]:
///   Chebyshev:  h(x) = sum_k w_k T_k(x)
///   Monomial:   h(x) = sum_k w_k x^k
///   Bernstein:  h(x) = sum_k w_k binom(K,k) ((1+x)/2)^k ((1-x)/2)^(K-k)
struct FilterCoefficients {
    Basis basis = Basis::Chebyshev;
    std::size_t order = 0;           // K
    std::vector<double> weights;     // w_0 .. w_K

    FilterCoefficients() = default;
    FilterCoefficients(Basis b, std::vector<double> w);

    /// Checks weights length = order+1 and all entries finite.
    void validate() const;
};

/// Evaluate the filter at x in [-1, 1]. Chebyshev series go through the
/// Clenshaw recurrence, monomials through Horner, Bernstein through
/// de Casteljau. |x| > 1 is a domain error: the toolkit only ever filters
/// spectra that have been mapped into [-1, 1].
double evaluate(const FilterCoefficients& coeffs, double x);

}  // namespace chebfilter
