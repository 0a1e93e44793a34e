#include "chebfilter/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chebfilter/error.hpp"

namespace chebfilter {

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = i + 1; j < a.cols; ++j) acc += a(i, j) * a(i, j);
    }
    return std::sqrt(2.0 * acc);
}

double frobenius_norm(const DenseMatrix& a) {
    double acc = 0.0;
    for (double v : a.data) acc += v * v;
    return std::sqrt(acc);
}

void rotate(DenseMatrix& a, DenseMatrix& v, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    if (apq == 0.0) return;
    const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                     (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.rows;
    for (std::size_t k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

}  // namespace

EigenDecomposition jacobi_eigendecompose(DenseMatrix a) {
    if (a.rows != a.cols) throw Error("jacobi: matrix must be square");
    const std::size_t n = a.rows;
    DenseMatrix v = DenseMatrix::identity(n);

    const double tol = 1e-12 * std::max(1.0, frobenius_norm(a));
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= tol) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
        }
    }

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = DenseMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t src = perm[col];
        out.eigenvalues[col] = a(src, src);
        std::size_t arg = 0;
        double best = -1.0;
        for (std::size_t row = 0; row < n; ++row) {
            const double mag = std::abs(v(row, src));
            if (mag > best) {
                best = mag;
                arg = row;
            }
        }
        const double sign = v(arg, src) < 0.0 ? -1.0 : 1.0;
        for (std::size_t row = 0; row < n; ++row) {
            out.eigenvectors(row, col) = sign * v(row, src);
        }
    }
    return out;
}

EigenDecomposition eigendecompose(const SpectralOperator& op) {
    if (op.size() > kEigenMaxNodes) {
        throw Error("eigendecompose: graph larger than the dense-solver cap (" +
                    std::to_string(kEigenMaxNodes) + " nodes)");
    }
    return jacobi_eigendecompose(op.to_dense());
}

}  // namespace chebfilter
