#include "chebfilter/operators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "chebfilter/error.hpp"
#include "chebfilter/rng.hpp"

namespace chebfilter {

unsigned internal_thread_cap() {
    static const unsigned cap = [] {
        const char* env = std::getenv("CHEBFILTER_THREADS");
        if (env == nullptr) return 1u;
        const long v = std::strtol(env, nullptr, 10);
        return v < 1 ? 1u : static_cast<unsigned>(v);
    }();
    return cap;
}

SpectralOperator::SpectralOperator(const Graph& graph, OperatorKind kind, double lambda_max)
    : graph_(&graph), kind_(kind), lambda_max_(lambda_max) {
    if (kind == OperatorKind::ScaledLaplacian && !(lambda_max > 0.0)) {
        throw Error("spectral operator: lambda_max must be positive");
    }
    inv_sqrt_deg_.resize(graph.n);
    const double shift = kind == OperatorKind::RenormalizedAdjacency ? 1.0 : 0.0;
    for (std::size_t i = 0; i < graph.n; ++i) {
        const double d = static_cast<double>(graph.degree(i)) + shift;
        inv_sqrt_deg_[i] = d > 0.0 ? 1.0 / std::sqrt(d) : 0.0;
    }
}

SpectralOperator build_operator(const Graph& graph, OperatorKind kind, double lambda_max) {
    return SpectralOperator(graph, kind, lambda_max);
}

void SpectralOperator::laplacian_matvec(std::span<const double> x, std::span<double> y) const {
    const Graph& g = *graph_;
    for (std::size_t i = 0; i < g.n; ++i) {
        double acc = 0.0;
        const double si = inv_sqrt_deg_[i];
        for (std::int32_t j : g.neighbors(i)) {
            acc += inv_sqrt_deg_[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
        }
        y[i] = x[i] - si * acc;
    }
}

void SpectralOperator::matvec(std::span<const double> x, std::span<double> y) const {
    const Graph& g = *graph_;
    if (x.size() != g.n || y.size() != g.n) {
        throw Error("spectral operator matvec: vector length does not match node count");
    }
    switch (kind_) {
        case OperatorKind::NormalizedLaplacian:
            laplacian_matvec(x, y);
            return;
        case OperatorKind::ScaledLaplacian: {
            laplacian_matvec(x, y);
            const double s = 2.0 / lambda_max_;
            for (std::size_t i = 0; i < g.n; ++i) y[i] = s * y[i] - x[i];
            return;
        }
        case OperatorKind::RenormalizedAdjacency: {
            for (std::size_t i = 0; i < g.n; ++i) {
                const double si = inv_sqrt_deg_[i];
                double acc = si * x[i];
                for (std::int32_t j : g.neighbors(i)) {
                    acc += inv_sqrt_deg_[static_cast<std::size_t>(j)] *
                           x[static_cast<std::size_t>(j)];
                }
                y[i] = si * acc;
            }
            return;
        }
    }
}

std::vector<double> SpectralOperator::matvec(const std::vector<double>& x) const {
    std::vector<double> y(x.size());
    matvec(std::span<const double>(x), std::span<double>(y));
    return y;
}

DenseMatrix SpectralOperator::matmat(const DenseMatrix& x) const {
    const Graph& g = *graph_;
    if (x.rows != g.n) {
        throw Error("spectral operator matmat: row count does not match node count");
    }
    DenseMatrix y(x.rows, x.cols);
    const std::size_t d = x.cols;

    auto run_rows = [&](std::size_t lo, std::size_t hi) {
        std::vector<double> acc(d);
        for (std::size_t i = lo; i < hi; ++i) {
            std::fill(acc.begin(), acc.end(), 0.0);
            const double si = inv_sqrt_deg_[i];
            for (std::int32_t jj : g.neighbors(i)) {
                const std::size_t j = static_cast<std::size_t>(jj);
                const double sj = inv_sqrt_deg_[j];
                const double* xr = x.data.data() + j * d;
                for (std::size_t c = 0; c < d; ++c) acc[c] += sj * xr[c];
            }
            const double* xi = x.data.data() + i * d;
            double* yi = y.data.data() + i * d;
            switch (kind_) {
                case OperatorKind::NormalizedLaplacian:
                    for (std::size_t c = 0; c < d; ++c) yi[c] = xi[c] - si * acc[c];
                    break;
                case OperatorKind::ScaledLaplacian: {
                    const double s = 2.0 / lambda_max_;
                    for (std::size_t c = 0; c < d; ++c) {
                        yi[c] = s * (xi[c] - si * acc[c]) - xi[c];
                    }
                    break;
                }
                case OperatorKind::RenormalizedAdjacency:
                    for (std::size_t c = 0; c < d; ++c) yi[c] = si * (si * xi[c] + acc[c]);
                    break;
            }
        }
    };

    const unsigned threads = std::min<unsigned>(
        internal_thread_cap(), static_cast<unsigned>(std::max<std::size_t>(g.n / 256, 1)));
    if (threads <= 1) {
        run_rows(0, g.n);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (g.n + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t lo = t * chunk;
            const std::size_t hi = std::min(g.n, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_rows, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return y;
}

DenseMatrix SpectralOperator::to_dense() const {
    const std::size_t n = graph_->n;
    DenseMatrix m(n, n);
    std::vector<double> e(n, 0.0);
    std::vector<double> col(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        matvec(std::span<const double>(e), std::span<double>(col));
        for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
        e[j] = 0.0;
    }
    return m;
}

double SpectralOperator::spectrum_lo() const {
    switch (kind_) {
        case OperatorKind::NormalizedLaplacian: return 0.0;
        case OperatorKind::ScaledLaplacian: return -1.0;
        case OperatorKind::RenormalizedAdjacency: return -1.0;
    }
    return -1.0;
}

double SpectralOperator::spectrum_hi() const {
    switch (kind_) {
        case OperatorKind::NormalizedLaplacian: return 2.0;
        case OperatorKind::ScaledLaplacian: return 1.0;
        case OperatorKind::RenormalizedAdjacency: return 1.0;
    }
    return 1.0;
}

double estimate_lambda_max(const SpectralOperator& op, std::size_t iters, double tol) {
    if (op.kind() != OperatorKind::NormalizedLaplacian) {
        throw Error("estimate_lambda_max: expects the normalized Laplacian");
    }
    if (iters < 1) throw Error("estimate_lambda_max: iters must be >= 1");
    if (op.graph().m == 0) return 0.0;

    const std::size_t n = op.size();
    Rng rng(0x5eedf11e);
    std::vector<double> v(n);
    for (double& vi : v) vi = rng.uniform(-1.0, 1.0);
    std::vector<double> w(n);

    double estimate = 0.0;
    double prev = -1.0;
    for (std::size_t it = 0; it < iters; ++it) {
        double norm = 0.0;
        for (double vi : v) norm += vi * vi;
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;
        for (double& vi : v) vi /= norm;

        op.matvec(std::span<const double>(v), std::span<double>(w));
        for (std::size_t i = 0; i < n; ++i) w[i] += v[i];  // (L + I) v

        double rayleigh = 0.0;
        for (std::size_t i = 0; i < n; ++i) rayleigh += v[i] * w[i];
        estimate = rayleigh - 1.0;
        if (it > 0 && std::abs(estimate - prev) <= tol * 1e-2) break;
        prev = estimate;
        v.swap(w);
    }
    return std::min(std::max(estimate, 0.0) + tol, 2.0);
}

}  // namespace chebfilter
