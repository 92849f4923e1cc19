#include "exactcolor/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace exactcolor {

namespace {

std::pair<int, int> normalize(int u, int v, int n) {
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("self-loops are not allowed");
    return u < v ? std::pair{u, v} : std::pair{v, u};
}

std::size_t checked_count(int vertex_count) {
    if (vertex_count < 0)
        throw std::invalid_argument("negative vertex count");
    return static_cast<std::size_t>(vertex_count);
}

} // namespace

Graph::Graph(int vertex_count)
    : vertex_count_(vertex_count), labels_(checked_count(vertex_count)) {}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> labels)
    : Graph(vertex_count) {
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != vertex_count)
            throw std::invalid_argument("label count does not match vertex count");
        labels_ = std::move(labels);
    }
    for (auto& e : edges)
        e = normalize(e.first, e.second, vertex_count_);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

bool Graph::has_edge(int u, int v) const {
    if (u == v)
        return false;
    if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
        return false;
    auto e = u < v ? std::pair{u, v} : std::pair{v, u};
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Graph::add_vertex(std::string label) {
    labels_.push_back(std::move(label));
    return vertex_count_++;
}

void Graph::add_edge(int u, int v) {
    auto e = normalize(u, v, vertex_count_);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        edges_.insert(it, e);
}

void Graph::set_label(int v, std::string label) {
    labels_.at(v) = std::move(label);
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(vertex_count_, 0);
    for (auto [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(vertex_count_);
    for (auto [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& row : adj)
        std::sort(row.begin(), row.end());
    return adj;
}

bool validate_coloring(const Graph& g, const Coloring& c, int k) {
    if (static_cast<int>(c.assignment.size()) != g.vertex_count())
        throw std::invalid_argument("assignment length does not match vertex count");
    if (k < 0)
        throw std::invalid_argument("negative color count");
    int used = 0;
    std::vector<char> seen(static_cast<size_t>(k), 0);
    for (int color : c.assignment) {
        if (color < 0 || color >= k)
            return false;
        if (!seen[color]) {
            seen[color] = 1;
            ++used;
        }
    }
    if (used != c.colors_used || used > k)
        return false;
    for (auto [u, v] : g.edges())
        if (c.assignment[u] == c.assignment[v])
            return false;
    return true;
}

Graph join(const Graph& a, const Graph& b) {
    const int offset = a.vertex_count();
    Graph g(offset + b.vertex_count());
    for (int v = 0; v < a.vertex_count(); ++v)
        g.set_label(v, "A:" + a.label(v));
    for (int v = 0; v < b.vertex_count(); ++v)
        g.set_label(offset + v, "B:" + b.label(v));
    for (auto [u, v] : a.edges())
        g.add_edge(u, v);
    for (auto [u, v] : b.edges())
        g.add_edge(offset + u, offset + v);
    for (int u = 0; u < a.vertex_count(); ++u)
        for (int v = 0; v < b.vertex_count(); ++v)
            g.add_edge(u, offset + v);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int offset = a.vertex_count();
    Graph g(offset + b.vertex_count());
    for (int v = 0; v < a.vertex_count(); ++v)
        g.set_label(v, a.label(v));
    for (int v = 0; v < b.vertex_count(); ++v)
        g.set_label(offset + v, b.label(v));
    for (auto [u, v] : a.edges())
        g.add_edge(u, v);
    for (auto [u, v] : b.edges())
        g.add_edge(offset + u, offset + v);
    return g;
}

Graph prefix_labels(Graph g, const std::string& prefix) {
    for (int v = 0; v < g.vertex_count(); ++v)
        g.set_label(v, prefix + g.label(v));
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

} // namespace exactcolor
