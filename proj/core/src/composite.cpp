#include "exactcolor/composite.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace exactcolor {

struct CompositeGraph::Node {
    Kind kind = Kind::leaf;
    Graph graph;                     // leaf only
    std::optional<int> declared_chi; // leaf only
    std::vector<CompositeGraph> children;
    int vertex_count = 0;
    int leaf_count = 0;
};

CompositeGraph CompositeGraph::leaf(Graph g, std::optional<int> declared_chi) {
    if (declared_chi && *declared_chi < 0)
        throw std::invalid_argument("declared chromatic number must be non-negative");
    auto node = std::make_shared<Node>();
    node->kind = Kind::leaf;
    node->vertex_count = g.vertex_count();
    node->leaf_count = 1;
    node->graph = std::move(g);
    node->declared_chi = declared_chi;
    return CompositeGraph(std::move(node));
}

CompositeGraph CompositeGraph::make_internal(Kind kind, std::vector<CompositeGraph> children) {
    if (children.size() < 2)
        throw std::invalid_argument("join/union nodes need at least two children");
    auto node = std::make_shared<Node>();
    node->kind = kind;
    for (const auto& child : children) {
        node->vertex_count += child.vertex_count();
        node->leaf_count += child.leaf_count();
    }
    node->children = std::move(children);
    return CompositeGraph(std::move(node));
}

CompositeGraph CompositeGraph::join_of(std::vector<CompositeGraph> children) {
    return make_internal(Kind::join, std::move(children));
}

CompositeGraph CompositeGraph::union_of(std::vector<CompositeGraph> children) {
    return make_internal(Kind::disjoint_union, std::move(children));
}

CompositeGraph::Kind CompositeGraph::kind() const noexcept { return node_->kind; }

const Graph& CompositeGraph::leaf_graph() const {
    if (node_->kind != Kind::leaf)
        throw std::logic_error("leaf_graph() on an internal node");
    return node_->graph;
}

std::optional<int> CompositeGraph::declared_chi() const {
    if (node_->kind != Kind::leaf)
        throw std::logic_error("declared_chi() on an internal node");
    return node_->declared_chi;
}

const std::vector<CompositeGraph>& CompositeGraph::children() const {
    if (node_->kind == Kind::leaf)
        throw std::logic_error("children() on a leaf");
    return node_->children;
}

int CompositeGraph::vertex_count() const noexcept { return node_->vertex_count; }
int CompositeGraph::leaf_count() const noexcept { return node_->leaf_count; }

namespace {

void collect_leaves(const CompositeGraph& c, std::vector<const Graph*>& out) {
    if (c.is_leaf()) {
        out.push_back(&c.leaf_graph());
        return;
    }
    for (const auto& child : c.children())
        collect_leaves(child, out);
}

} // namespace

std::vector<const Graph*> CompositeGraph::leaves() const {
    std::vector<const Graph*> out;
    out.reserve(static_cast<size_t>(leaf_count()));
    collect_leaves(*this, out);
    return out;
}

Graph CompositeGraph::flatten() const {
    if (is_leaf())
        return leaf_graph();
    const auto& kids = children();
    Graph acc = kids.front().flatten();
    for (size_t i = 1; i < kids.size(); ++i) {
        Graph next = kids[i].flatten();
        acc = kind() == Kind::join ? join(acc, next) : disjoint_union(acc, next);
    }
    return acc;
}

namespace {

void describe_node(const CompositeGraph& c, int depth, std::ostringstream& out) {
    out << std::string(static_cast<size_t>(depth) * 2, ' ');
    if (c.is_leaf()) {
        const Graph& g = c.leaf_graph();
        out << "leaf v=" << g.vertex_count() << " e=" << g.edge_count();
        if (auto chi = c.declared_chi())
            out << " chi=" << *chi;
        if (g.vertex_count() > 0 && !g.label(0).empty())
            out << " tag=" << g.label(0);
        out << '\n';
        return;
    }
    out << (c.kind() == CompositeGraph::Kind::join ? "join" : "union") << '\n';
    for (const auto& child : c.children())
        describe_node(child, depth + 1, out);
}

int chi_walk(const CompositeGraph& c, std::span<const std::optional<int>> leaf_chi,
             int& leaf_index) {
    if (c.is_leaf()) {
        const int i = leaf_index++;
        if (i < static_cast<int>(leaf_chi.size()) && leaf_chi[i])
            return *leaf_chi[i];
        if (auto declared = c.declared_chi())
            return *declared;
        throw std::invalid_argument("leaf " + std::to_string(i) +
                                    " has no chromatic number (neither supplied nor declared)");
    }
    int acc = 0;
    for (const auto& child : c.children()) {
        const int v = chi_walk(child, leaf_chi, leaf_index);
        acc = c.kind() == CompositeGraph::Kind::join ? acc + v : std::max(acc, v);
    }
    return acc;
}

} // namespace

std::string CompositeGraph::describe() const {
    std::ostringstream out;
    describe_node(*this, 0, out);
    return out.str();
}

int composite_chi(const CompositeGraph& c, std::span<const std::optional<int>> leaf_chi) {
    int leaf_index = 0;
    return chi_walk(c, leaf_chi, leaf_index);
}

int composite_chi(const CompositeGraph& c) { return composite_chi(c, {}); }

} // namespace exactcolor
