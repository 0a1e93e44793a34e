#pragma once

#include <string>
#include <vector>

#include "chebfilter/dense.hpp"
#include "chebfilter/graph.hpp"

namespace chebfilter {

/// A node-classification dataset: graph, node features, integer labels.
struct Dataset {
    Graph graph;
    DenseMatrix features;     // n x f
    std::vector<int> labels;  // length n, values in [0, num_classes)
    int num_classes = 0;

    bool operator==(const Dataset& other) const = default;
};

/// Load a dataset from the three on-disk artifacts:
///   edges    — text, one "u v" pair of 0-based ids per line, '#' comments;
///              order-insensitive, duplicates and reversed duplicates merge
///   features — headerless CSV, n rows of f numeric columns (defines n)
///   labels   — text, one integer per line, n lines
Dataset load_dataset(const std::string& edge_path, const std::string& feature_path,
                     const std::string& label_path);

/// Edge-list parsing on its own, for callers that have no features/labels.
std::vector<std::pair<std::int32_t, std::int32_t>> parse_edge_file(const std::string& path);

/// Mean over all nodes of the fraction of neighbors sharing the node's
/// label; isolated nodes contribute 0. Always in [0, 1] and invariant
/// under node relabeling.
double homophily(const Dataset& dataset);

}  // namespace chebfilter
