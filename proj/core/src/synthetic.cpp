#include "chebfilter/synthetic.hpp"

#include <algorithm>
#include <cmath>

#include "chebfilter/error.hpp"
#include "chebfilter/rng.hpp"

namespace chebfilter {

namespace {

constexpr std::size_t kFeatureBins = 8;
constexpr double kSignalNoise = 2.5;   // std of the noise on the planted scalar
constexpr double kFeatureNoise = 0.02; // dense jitter on the one-hot features

// Expected degrees; converted to pair probabilities below.
constexpr double kHomoSameDegree = 8.0;
constexpr double kHomoCrossDegree = 1.0;
constexpr double kHeteroSameDegree = 0.8;
constexpr double kHeteroCrossDegree = 6.0;

}  // namespace

Dataset generate_synthetic(std::size_t n, SyntheticKind kind, std::uint64_t seed) {
    if (n < 8) throw Error("generate_synthetic: need at least 8 nodes");
    if (kind == SyntheticKind::Heterophilic && n % 2 != 0) {
        throw Error("generate_synthetic: heterophilic graphs need an even node count");
    }
    const std::size_t half = n / 2;
    Rng rng(seed);

    const double same_deg =
        kind == SyntheticKind::Homophilic ? kHomoSameDegree : kHeteroSameDegree;
    const double cross_deg =
        kind == SyntheticKind::Homophilic ? kHomoCrossDegree : kHeteroCrossDegree;
    const double p_same = std::min(1.0, same_deg / static_cast<double>(half));
    const double p_cross = std::min(1.0, cross_deg / static_cast<double>(half));

    auto side = [&](std::size_t v) { return v < half ? 0 : 1; };

    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double p = side(i) == side(j) ? p_same : p_cross;
            if (rng.bernoulli(p)) {
                edges.emplace_back(static_cast<std::int32_t>(i),
                                   static_cast<std::int32_t>(j));
            }
        }
    }

    Dataset ds;
    ds.graph = graph_from_edges(n, std::move(edges));
    ds.num_classes = 2;
    ds.labels.resize(n);
    for (std::size_t v = 0; v < n; ++v) ds.labels[v] = side(v);

    // Planted signal: +1 on one side, -1 on the other, buried in noise.
    ds.features = DenseMatrix(n, kFeatureBins);
    for (std::size_t v = 0; v < n; ++v) {
        const double z = side(v) == 0 ? 1.0 : -1.0;
        const double s = z + kSignalNoise * rng.normal();
        const double clamped = std::clamp(s, -4.0, 4.0 - 1e-9);
        const std::size_t bin = static_cast<std::size_t>((clamped + 4.0) / 8.0 *
                                                         static_cast<double>(kFeatureBins));
        for (std::size_t b = 0; b < kFeatureBins; ++b) {
            ds.features(v, b) = (b == bin ? 1.0 : 0.0) + kFeatureNoise * rng.normal();
        }
    }
    return ds;
}

}  // namespace chebfilter
