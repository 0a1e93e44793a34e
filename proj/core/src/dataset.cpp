#include "chebfilter/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "chebfilter/error.hpp"

namespace chebfilter {

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path);
    return in;
}

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

std::vector<std::pair<std::int32_t, std::int32_t>> parse_edge_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ss(line);
        long long u = 0, v = 0;
        std::string extra;
        if (!(ss >> u >> v)) throw ParseError(path, lineno, "expected two integer node ids");
        if (ss >> extra) throw ParseError(path, lineno, "trailing tokens after edge");
        if (u < 0 || v < 0) throw ParseError(path, lineno, "negative node id");
        edges.emplace_back(static_cast<std::int32_t>(u), static_cast<std::int32_t>(v));
    }
    return edges;
}

namespace {

DenseMatrix parse_feature_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            while (end != nullptr && *end != '\0' &&
                   std::isspace(static_cast<unsigned char>(*end))) {
                ++end;
            }
            if (end == cell.c_str() || (end != nullptr && *end != '\0')) {
                throw ParseError(path, lineno, "non-numeric feature value '" + cell + "'");
            }
            row.push_back(v);
        }
        if (row.empty()) throw ParseError(path, lineno, "empty feature row");
        if (width == 0) {
            width = row.size();
        } else if (row.size() != width) {
            throw ParseError(path, lineno, "inconsistent feature column count");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw IoError("feature file is empty: " + path);
    DenseMatrix features(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < width; ++j) features(i, j) = rows[i][j];
    }
    return features;
}

std::vector<int> parse_label_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::vector<int> labels;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ss(line);
        long long y = 0;
        std::string extra;
        if (!(ss >> y)) throw ParseError(path, lineno, "expected one integer label");
        if (ss >> extra) throw ParseError(path, lineno, "trailing tokens after label");
        if (y < 0) throw ParseError(path, lineno, "negative label");
        labels.push_back(static_cast<int>(y));
    }
    return labels;
}

}  // namespace

Dataset load_dataset(const std::string& edge_path, const std::string& feature_path,
                     const std::string& label_path) {
    Dataset ds;
    ds.features = parse_feature_file(feature_path);
    const std::size_t n = ds.features.rows;

    ds.labels = parse_label_file(label_path);
    if (ds.labels.size() != n) {
        throw IoError("label count (" + std::to_string(ds.labels.size()) +
                      ") does not match feature rows (" + std::to_string(n) + ") in " +
                      label_path);
    }
    int max_label = 0;
    for (int y : ds.labels) max_label = std::max(max_label, y);
    ds.num_classes = max_label + 1;

    auto edges = parse_edge_file(edge_path);
    for (const auto& [u, v] : edges) {
        if (static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
            throw IoError("edge references node id >= n inferred from features (n=" +
                          std::to_string(n) + ") in " + edge_path);
        }
    }
    ds.graph = graph_from_edges(n, std::move(edges));
    return ds;
}

double homophily(const Dataset& dataset) {
    const Graph& g = dataset.graph;
    if (g.n == 0) return 0.0;
    double acc = 0.0;
    for (std::size_t v = 0; v < g.n; ++v) {
        const auto nbrs = g.neighbors(v);
        if (nbrs.empty()) continue;
        std::size_t same = 0;
        for (std::int32_t u : nbrs) {
            if (dataset.labels[static_cast<std::size_t>(u)] == dataset.labels[v]) ++same;
        }
        acc += static_cast<double>(same) / static_cast<double>(nbrs.size());
    }
    return acc / static_cast<double>(g.n);
}

}  // namespace chebfilter
