#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ocsel/types.hpp"

namespace ocsel {

// Undirected simple graph. Edges are stored normalized (u < v), sorted
// and duplicate-free. An optional bipartition declares the first
// left_size vertices as the left side; every edge must then cross it.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::optional<int> left_size;

    int edge_count() const { return static_cast<int>(edges.size()); }
    std::vector<int> degrees() const;
    std::optional<int> regular_degree() const;
    bool has_edge(int u, int v) const;

    // Validates simplicity, index ranges and the bipartition (when set).
    static Graph build(int vertex_count, std::vector<std::pair<int, int>> raw_edges,
                       std::optional<int> left_size = std::nullopt);

    // Edge-list text: "p <vertex_count>", optional "b <left_size>", then
    // one "e u v" line per edge, all 0-based. '#' starts a comment.
    static Graph parse_text(const std::string& text);
    std::string to_text() const;

    // complete:k | cycle:k | path:k (k edges, k+1 vertices) |
    // complete_bipartite:a:b | random_regular:n:d:seed
    static Graph from_family(const std::string& spec);

    // Family spec if it looks like one, otherwise a file path.
    static Graph load(const std::string& path_or_family);
};

// Exhaustive-search oracles; ground truth for the reduction round-trip
// tests. All refuse vertex_count > 16.
bool has_clique(const Graph& g, int k);
int min_vertex_cover_size(const Graph& g);
bool has_biclique(const Graph& g, int k);

inline constexpr int kGraphOracleMaxVertices = 16;

} // namespace ocsel
