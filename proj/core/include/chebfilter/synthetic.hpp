#pragma once

#include <cstdint>

#include "chebfilter/dataset.hpp"

namespace chebfilter {

enum class SyntheticKind { Homophilic, Heterophilic };

/// Deterministic two-class benchmark graphs.
///
/// Homophilic: two dense same-label blocks with a sparse interconnect, so
/// most neighbors share the node's label. Heterophilic: a near-bipartite
/// graph whose labels are the two sides, so almost no neighbor does.
///
/// Node features one-hot encode a noisy scalar aligned with the planted
/// label signal (the block/side indicator), binned into 8 buckets, plus a
/// little dense noise. Per-node features alone classify poorly; averaging
/// the signal over the right spectral component classifies almost
/// perfectly. Identical inputs produce byte-identical datasets.
Dataset generate_synthetic(std::size_t n, SyntheticKind kind, std::uint64_t seed);

}  // namespace chebfilter
