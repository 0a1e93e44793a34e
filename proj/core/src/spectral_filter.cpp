#include "chebfilter/spectral_filter.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "chebfilter/csv.hpp"
#include "chebfilter/error.hpp"

namespace chebfilter {

std::vector<double> apply_cheb_filter(const SpectralOperator& op,
                                      const FilterCoefficients& coeffs,
                                      const std::vector<double>& x) {
    DenseMatrix xm(x.size(), 1);
    xm.data = x;
    return apply_cheb_filter(op, coeffs, xm).data;
}

DenseMatrix apply_cheb_filter(const SpectralOperator& op, const FilterCoefficients& coeffs,
                              const DenseMatrix& x) {
    if (op.kind() != OperatorKind::ScaledLaplacian) {
        throw Error("apply_cheb_filter: operator must be the scaled Laplacian");
    }
    if (coeffs.basis != Basis::Chebyshev) {
        throw Error("apply_cheb_filter: coefficients must be a Chebyshev series");
    }
    if (x.rows != op.size()) {
        throw Error("apply_cheb_filter: signal length does not match node count");
    }
    coeffs.validate();

    const std::size_t total = x.data.size();
    DenseMatrix y(x.rows, x.cols);
    for (std::size_t i = 0; i < total; ++i) y.data[i] = coeffs.weights[0] * x.data[i];
    if (coeffs.order == 0) return y;

    DenseMatrix prev = x;             // t_0
    DenseMatrix curr = op.matmat(x);  // t_1
    for (std::size_t i = 0; i < total; ++i) y.data[i] += coeffs.weights[1] * curr.data[i];
    for (std::size_t k = 2; k <= coeffs.order; ++k) {
        DenseMatrix next = op.matmat(curr);
        for (std::size_t i = 0; i < total; ++i) {
            next.data[i] = 2.0 * next.data[i] - prev.data[i];
        }
        for (std::size_t i = 0; i < total; ++i) {
            y.data[i] += coeffs.weights[k] * next.data[i];
        }
        prev = std::move(curr);
        curr = std::move(next);
    }
    return y;
}

namespace {

std::vector<double> filter_in_eigenbasis(const EigenDecomposition& eig,
                                         const std::vector<double>& x,
                                         const std::vector<double>& responses) {
    std::vector<double> z = matvec_transposed(eig.eigenvectors, x);  // U^T x
    for (std::size_t i = 0; i < z.size(); ++i) z[i] *= responses[i];
    return matvec(eig.eigenvectors, z);  // U (h .* z)
}

}  // namespace

std::vector<double> apply_exact_filter(const EigenDecomposition& eig,
                                       const std::function<double(double)>& h,
                                       const std::vector<double>& x) {
    if (x.size() != eig.size()) {
        throw Error("apply_exact_filter: signal length does not match decomposition");
    }
    std::vector<double> responses(eig.size());
    for (std::size_t i = 0; i < eig.size(); ++i) {
        responses[i] = h(eig.eigenvalues[i]);
        if (!std::isfinite(responses[i])) {
            throw Error("apply_exact_filter: non-finite response at eigenvalue index " +
                        std::to_string(i));
        }
    }
    return filter_in_eigenbasis(eig, x, responses);
}

std::vector<double> apply_sampled_filter(const EigenDecomposition& eig,
                                         const SampledFilter& filter,
                                         const std::vector<double>& x) {
    if (filter.responses.size() != eig.size() || filter.lambdas.size() != eig.size()) {
        throw Error("apply_sampled_filter: filter length does not match decomposition");
    }
    if (x.size() != eig.size()) {
        throw Error("apply_sampled_filter: signal length does not match decomposition");
    }
    return filter_in_eigenbasis(eig, x, filter.responses);
}

std::function<double(double)> impulse_filter(double target, double tol) {
    if (!(tol > 0.0)) throw Error("impulse_filter: tol must be positive");
    return [target, tol](double lambda) {
        return std::abs(lambda - target) <= tol ? 1.0 : 0.0;
    };
}

SampledFilter recover_perfect_filter(const EigenDecomposition& eig,
                                     const std::vector<double>& x,
                                     const std::vector<double>& y, double epsilon) {
    if (x.size() != eig.size() || y.size() != eig.size()) {
        throw Error("recover_perfect_filter: signal length does not match decomposition");
    }
    for (double v : y) {
        if (v != 1.0 && v != -1.0) {
            throw Error("recover_perfect_filter: labels must be +1 or -1");
        }
    }
    const std::vector<double> zx = matvec_transposed(eig.eigenvectors, x);
    const std::vector<double> zy = matvec_transposed(eig.eigenvectors, y);

    SampledFilter out;
    out.lambdas = eig.eigenvalues;
    out.responses.resize(eig.size());
    for (std::size_t i = 0; i < eig.size(); ++i) {
        if (std::abs(zx[i]) <= epsilon) {
            throw Error("recover_perfect_filter: signal is orthogonal to eigenvector " +
                        std::to_string(i) + " (|coefficient| <= epsilon)");
        }
        out.responses[i] = zy[i] / zx[i];
    }
    return out;
}

SampledFilter sample_filter_response(const FilterCoefficients& coeffs, std::size_t grid) {
    if (grid < 2) throw Error("sample_filter_response: grid must be >= 2");
    const bool laplacian_domain = coeffs.basis == Basis::Bernstein;
    const double lo = laplacian_domain ? 0.0 : -1.0;
    const double hi = laplacian_domain ? 2.0 : 1.0;

    SampledFilter out;
    out.lambdas.resize(grid);
    out.responses.resize(grid);
    for (std::size_t i = 0; i < grid; ++i) {
        const double lambda =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid - 1);
        out.lambdas[i] = lambda;
        // Bernstein filters live on the Laplacian spectrum; shift into the
        // canonical [-1, 1] evaluation domain.
        const double x = laplacian_domain ? lambda - 1.0 : lambda;
        out.responses[i] = evaluate(coeffs, x);
    }
    return out;
}

std::string sampled_filter_csv(const SampledFilter& filter) {
    std::ostringstream out;
    out << "lambda,response\n";
    for (std::size_t i = 0; i < filter.lambdas.size(); ++i) {
        out << format_number(filter.lambdas[i]) << ',' << format_number(filter.responses[i])
            << '\n';
    }
    return out.str();
}

}  // namespace chebfilter
