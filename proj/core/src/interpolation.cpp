#include "chebfilter/interpolation.hpp"

#include <algorithm>
#include <cmath>

#include "chebfilter/error.hpp"

namespace chebfilter {

namespace {

void check_distinct(const std::vector<double>& nodes) {
    if (nodes.empty()) throw Error("interpolation: empty node set");
    std::vector<double> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) throw Error("interpolation: duplicate nodes");
    }
}

}  // namespace

BarycentricInterpolant::BarycentricInterpolant(std::vector<double> nodes,
                                               std::vector<double> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
    if (nodes_.size() != values_.size()) {
        throw Error("interpolation: node/value count mismatch");
    }
    check_distinct(nodes_);
    weights_.assign(nodes_.size(), 1.0);
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        for (std::size_t j = 0; j < nodes_.size(); ++j) {
            if (j == k) continue;
            weights_[k] /= nodes_[k] - nodes_[j];
        }
    }
}

double BarycentricInterpolant::operator()(double x) const {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        const double diff = x - nodes_[k];
        if (diff == 0.0) return values_[k];
        const double q = weights_[k] / diff;
        num += q * values_[k];
        den += q;
    }
    return num / den;
}

double lagrange_interpolate(const std::function<double(double)>& h,
                            const std::vector<double>& nodes, double x) {
    std::vector<double> values(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) values[k] = h(nodes[k]);
    return BarycentricInterpolant(nodes, std::move(values))(x);
}

std::vector<double> equispaced_nodes(std::size_t order) {
    std::vector<double> nodes(order + 1);
    if (order == 0) {
        nodes[0] = 0.0;
        return nodes;
    }
    for (std::size_t j = 0; j <= order; ++j) {
        nodes[j] = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(order);
    }
    return nodes;
}

FilterCoefficients vandermonde_interpolate(const std::function<double(double)>& h,
                                           const std::vector<double>& nodes) {
    check_distinct(nodes);
    const std::size_t n = nodes.size();  // K+1 equations
    if (n - 1 > kVandermondeMaxOrder) {
        throw Error("vandermonde_interpolate: order above conditioning guard (30)");
    }

    // Row i: [1, x_i, x_i^2, ..., x_i^K | h(x_i)]
    std::vector<std::vector<double>> aug(n, std::vector<double>(n + 1, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        double p = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            aug[i][j] = p;
            p *= nodes[i];
        }
        aug[i][n] = h(nodes[i]);
    }

    // Elimination with partial pivoting.
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(aug[r][col]) > std::abs(aug[pivot][col])) pivot = r;
        }
        if (aug[pivot][col] == 0.0) throw Error("vandermonde_interpolate: singular system");
        std::swap(aug[col], aug[pivot]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = aug[r][col] / aug[col][col];
            if (f == 0.0) continue;
            for (std::size_t j = col; j <= n; ++j) aug[r][j] -= f * aug[col][j];
        }
    }
    std::vector<double> coeffs(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = aug[i][n];
        for (std::size_t j = i + 1; j < n; ++j) acc -= aug[i][j] * coeffs[j];
        coeffs[i] = acc / aug[i][i];
    }
    return FilterCoefficients(Basis::Monomial, std::move(coeffs));
}

}  // namespace chebfilter
