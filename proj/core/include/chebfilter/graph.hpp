#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace chebfilter {

/// Immutable undirected graph in CSR form. Each undirected edge is stored
/// twice (both directions), the base graph carries no self-loops and no
/// duplicate entries. Safe for concurrent readers once built.
struct Graph {
    std::size_t n = 0;                  // node count
    std::vector<std::int32_t> indptr;   // length n+1, nondecreasing, indptr[n] = 2m
    std::vector<std::int32_t> indices;  // neighbor ids, sorted within each row
    std::size_t m = 0;                  // undirected edge count

    std::span<const std::int32_t> neighbors(std::size_t v) const {
        return {indices.data() + indptr[v], indices.data() + indptr[v + 1]};
    }

    std::size_t degree(std::size_t v) const {
        return static_cast<std::size_t>(indptr[v + 1] - indptr[v]);
    }

    bool operator==(const Graph& other) const = default;
};

/// Build a graph from raw edge pairs: symmetrizes, merges duplicates and
/// reversed duplicates, drops self-loops, validates ids against n.
Graph graph_from_edges(std::size_t n, std::vector<std::pair<std::int32_t, std::int32_t>> edges);

/// Cycle graph on n >= 3 nodes; every node has degree 2.
Graph build_ring(std::size_t n);

}  // namespace chebfilter
