#pragma once

#include <string>
#include <utility>
#include <vector>

namespace exactcolor {

/// Finite simple undirected graph over dense vertex indices 0..n-1.
///
/// Edges are kept sorted, unique and normalized (first < second), so two
/// graphs built from the same edge set in any order compare equal and
/// serialize identically. Each vertex carries a free-form provenance label
/// (possibly empty) that construction helpers use to record where a vertex
/// came from; labels do not participate in any structural algorithm.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
          std::vector<std::string> labels = {});

    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }

    bool has_edge(int u, int v) const;

    /// Appends an isolated vertex, returns its index.
    int add_vertex(std::string label = {});

    /// Inserts {u, v}. Self-loops and out-of-range endpoints throw
    /// std::invalid_argument; inserting an existing edge is a no-op.
    void add_edge(int u, int v);

    void set_label(int v, std::string label);

    std::vector<int> degrees() const;
    std::vector<std::vector<int>> adjacency() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::string> labels_;
};

/// Proper coloring candidate: assignment[v] is the color of vertex v,
/// colors_used counts the distinct colors (== max color + 1 for the colorings
/// this library produces).
struct Coloring {
    std::vector<int> assignment;
    int colors_used = 0;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// True iff `c` colors every vertex with a color in [0, k], uses at most k
/// colors, and no edge is monochromatic. colors_used must match the
/// assignment. Throws std::invalid_argument if the assignment length does not
/// equal the vertex count.
bool validate_coloring(const Graph& g, const Coloring& c, int k);

/// Join: disjoint copies of a and b plus every edge between the two sides.
/// Vertices of b are re-indexed by +a.vertex_count(); labels gain an "A:" or
/// "B:" side tag so provenance stays traceable after composition.
Graph join(const Graph& a, const Graph& b);

/// Disjoint union: copies of a and b with b re-indexed by +a.vertex_count()
/// and no cross edges. Labels are preserved verbatim.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Copy of g with `prefix` prepended to every vertex label.
Graph prefix_labels(Graph g, const std::string& prefix);

Graph complete_graph(int n);

/// Cycle on n >= 3 vertices; smaller n throws std::invalid_argument.
Graph cycle_graph(int n);

} // namespace exactcolor
