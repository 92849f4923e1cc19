#pragma once

#include "exactcolor/graph.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace exactcolor {

/// Expression tree over leaf graphs whose internal nodes are joins or
/// disjoint unions. Nodes are immutable and shared, so copies are cheap and
/// a subtree can appear in several composites. The tree preserves the
/// construction structure that a flattened Graph forgets, which is what lets
/// the chromatic number of a composition be computed arithmetically from the
/// leaf values instead of by search.
class CompositeGraph {
public:
    enum class Kind { leaf, join, disjoint_union };

    /// Wraps a concrete graph. `declared_chi`, if given, is trusted by
    /// composite_chi; pass std::nullopt when the value should come from a
    /// solver run instead.
    static CompositeGraph leaf(Graph g, std::optional<int> declared_chi = std::nullopt);

    /// Internal nodes take at least two children; fewer throw
    /// std::invalid_argument.
    static CompositeGraph join_of(std::vector<CompositeGraph> children);
    static CompositeGraph union_of(std::vector<CompositeGraph> children);

    Kind kind() const noexcept;
    bool is_leaf() const noexcept { return kind() == Kind::leaf; }

    /// Leaf accessors; throw std::logic_error on internal nodes.
    const Graph& leaf_graph() const;
    std::optional<int> declared_chi() const;

    /// Child list; throws std::logic_error on leaves.
    const std::vector<CompositeGraph>& children() const;

    int vertex_count() const noexcept;
    int leaf_count() const noexcept;

    /// Leaf graphs in depth-first (left-to-right) order.
    std::vector<const Graph*> leaves() const;

    /// Materializes the expression into one Graph by folding children
    /// left-to-right with join / disjoint_union, so vertex indices follow
    /// depth-first leaf order.
    Graph flatten() const;

    /// Human-readable tree, one node per line, two-space indentation.
    std::string describe() const;

private:
    struct Node;
    explicit CompositeGraph(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static CompositeGraph make_internal(Kind kind, std::vector<CompositeGraph> children);
    std::shared_ptr<const Node> node_;
};

/// Chromatic number of the composition, computed arithmetically: joins add
/// the children's values, disjoint unions take the maximum. Leaf values come
/// from `leaf_chi` (indexed by depth-first leaf position) when present, else
/// from the leaf's declared value; a leaf with neither throws
/// std::invalid_argument.
int composite_chi(const CompositeGraph& c, std::span<const std::optional<int>> leaf_chi);
int composite_chi(const CompositeGraph& c);

} // namespace exactcolor
