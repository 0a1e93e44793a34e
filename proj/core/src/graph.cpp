#include "chebfilter/graph.hpp"

#include <algorithm>
#include <string>

#include "chebfilter/error.hpp"

namespace chebfilter {

Graph graph_from_edges(std::size_t n,
                       std::vector<std::pair<std::int32_t, std::int32_t>> edges) {
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
            static_cast<std::size_t>(v) >= n) {
            throw Error("graph: node id out of range for n=" + std::to_string(n) + ": (" +
                        std::to_string(u) + ", " + std::to_string(v) + ")");
        }
        if (u > v) std::swap(u, v);
    }
    // Canonical (min,max) form merges "u v" with "v u"; self-loops dropped.
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [](const auto& e) { return e.first == e.second; }),
                edges.end());

    Graph g;
    g.n = n;
    g.m = edges.size();
    std::vector<std::int32_t> deg(n, 0);
    for (const auto& [u, v] : edges) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    g.indptr.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) g.indptr[i + 1] = g.indptr[i] + deg[i];
    g.indices.assign(static_cast<std::size_t>(g.indptr[n]), 0);
    std::vector<std::int32_t> cursor(g.indptr.begin(), g.indptr.end() - 1);
    for (const auto& [u, v] : edges) {
        g.indices[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] = v;
        g.indices[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] = u;
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::sort(g.indices.begin() + g.indptr[i], g.indices.begin() + g.indptr[i + 1]);
    }
    return g;
}

Graph build_ring(std::size_t n) {
    if (n < 3) throw Error("build_ring: need at least 3 nodes");
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(static_cast<std::int32_t>(i),
                           static_cast<std::int32_t>((i + 1) % n));
    }
    return graph_from_edges(n, std::move(edges));
}

}  // namespace chebfilter
