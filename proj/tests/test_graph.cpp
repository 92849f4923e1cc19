#include "exactcolor/composite.hpp"
#include "exactcolor/graph.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace exactcolor;

TEST_CASE("edges are normalized, deduplicated and sorted") {
    Graph g(4, {{2, 1}, {0, 3}, {1, 2}, {3, 0}, {0, 1}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}});
    CHECK(g.has_edge(2, 1));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(1, 1));

    Graph h(4);
    h.add_edge(3, 0);
    h.add_edge(1, 2);
    h.add_edge(0, 1);
    h.add_edge(1, 0); // duplicate, ignored
    CHECK(g == h);
}

TEST_CASE("invalid construction throws") {
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {}, {"only-one"}), std::invalid_argument);
    Graph g(2);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 2), std::invalid_argument);
}

TEST_CASE("labels and add_vertex") {
    Graph g(1, {}, {"root"});
    CHECK(g.label(0) == "root");
    const int v = g.add_vertex("leafy");
    CHECK(v == 1);
    CHECK(g.vertex_count() == 2);
    CHECK(g.label(1) == "leafy");
    g.set_label(0, "renamed");
    CHECK(g.label(0) == "renamed");

    Graph p = prefix_labels(g, "pre/");
    CHECK(p.label(0) == "pre/renamed");
    CHECK(p.label(1) == "pre/leafy");
}

TEST_CASE("degrees and adjacency") {
    Graph g = cycle_graph(5);
    CHECK(g.degrees() == std::vector<int>{2, 2, 2, 2, 2});
    CHECK(g.adjacency()[0] == std::vector<int>{1, 4});
    CHECK(complete_graph(4).degrees() == std::vector<int>{3, 3, 3, 3});
    CHECK(complete_graph(0).vertex_count() == 0);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}

TEST_CASE("validate_coloring") {
    Graph k2 = complete_graph(2);
    CHECK(validate_coloring(k2, Coloring{{0, 1}, 2}, 2));
    CHECK(validate_coloring(k2, Coloring{{0, 1}, 2}, 5));
    CHECK_FALSE(validate_coloring(k2, Coloring{{0, 0}, 1}, 2));  // monochromatic edge
    CHECK_FALSE(validate_coloring(k2, Coloring{{0, 1}, 1}, 2));  // wrong colors_used
    CHECK_FALSE(validate_coloring(k2, Coloring{{0, 2}, 2}, 2));  // color out of range
    CHECK_FALSE(validate_coloring(k2, Coloring{{-1, 0}, 1}, 2)); // negative color
    CHECK(validate_coloring(Graph(), Coloring{}, 0));
    CHECK_THROWS_AS(validate_coloring(k2, Coloring{{0}, 1}, 2), std::invalid_argument);
}

TEST_CASE("join adds all cross edges and tags sides") {
    Graph a = cycle_graph(5);
    Graph b = complete_graph(2);
    b.set_label(0, "p");
    Graph j = join(a, b);
    CHECK(j.vertex_count() == 7);
    CHECK(j.edge_count() == 5 + 1 + 10);
    CHECK(j.has_edge(0, 5));
    CHECK(j.has_edge(4, 6));
    CHECK(j.has_edge(5, 6));
    CHECK(j.label(5) == "B:p");
    CHECK(j.label(0) == "A:");

    Graph empty;
    Graph je = join(empty, a);
    CHECK(je.vertex_count() == a.vertex_count());
    CHECK(je.edges() == a.edges());
}

TEST_CASE("disjoint union re-indexes and keeps labels") {
    Graph a = complete_graph(3);
    a.set_label(2, "last");
    Graph b = cycle_graph(4);
    Graph u = disjoint_union(a, b);
    CHECK(u.vertex_count() == 7);
    CHECK(u.edge_count() == 3 + 4);
    CHECK(u.has_edge(3, 4));
    CHECK_FALSE(u.has_edge(0, 3));
    CHECK(u.label(2) == "last");

    // two disjoint triangles
    Graph t = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK(t.vertex_count() == 6);
    CHECK(t.edge_count() == 6);
    CHECK_FALSE(t.has_edge(2, 3));
}

TEST_CASE("composite construction and accessors") {
    auto leaf_a = CompositeGraph::leaf(complete_graph(3), 3);
    auto leaf_b = CompositeGraph::leaf(cycle_graph(5));
    CHECK(leaf_a.is_leaf());
    CHECK(leaf_a.declared_chi() == 3);
    CHECK_FALSE(leaf_b.declared_chi().has_value());
    CHECK(leaf_a.vertex_count() == 3);
    CHECK_THROWS_AS(leaf_a.children(), std::logic_error);

    auto u = CompositeGraph::union_of({leaf_a, leaf_b});
    CHECK(u.kind() == CompositeGraph::Kind::disjoint_union);
    CHECK(u.vertex_count() == 8);
    CHECK(u.leaf_count() == 2);
    CHECK(u.children().size() == 2);
    CHECK_THROWS_AS(u.leaf_graph(), std::logic_error);
    CHECK_THROWS_AS(u.declared_chi(), std::logic_error);
    CHECK_THROWS_AS(CompositeGraph::join_of({leaf_a}), std::invalid_argument);
    CHECK_THROWS_AS(CompositeGraph::leaf(Graph(), -1), std::invalid_argument);
}

TEST_CASE("flatten folds children left to right") {
    auto leaf_a = CompositeGraph::leaf(complete_graph(3));
    auto leaf_b = CompositeGraph::leaf(cycle_graph(5));
    auto j = CompositeGraph::join_of({leaf_a, leaf_b});
    CHECK(j.flatten() == join(complete_graph(3), cycle_graph(5)));

    auto nested = CompositeGraph::union_of({j, CompositeGraph::leaf(complete_graph(2))});
    Graph expected = disjoint_union(join(complete_graph(3), cycle_graph(5)), complete_graph(2));
    CHECK(nested.flatten() == expected);
    CHECK(nested.vertex_count() == expected.vertex_count());

    auto leaves = nested.leaves();
    REQUIRE(leaves.size() == 3);
    CHECK(leaves[0]->vertex_count() == 3);
    CHECK(leaves[1]->vertex_count() == 5);
    CHECK(leaves[2]->vertex_count() == 2);
}

TEST_CASE("composite_chi arithmetic") {
    auto a = CompositeGraph::leaf(complete_graph(3), 3);
    auto b = CompositeGraph::leaf(complete_graph(4), 4);
    auto c = CompositeGraph::leaf(cycle_graph(5), 3);
    CHECK(composite_chi(CompositeGraph::join_of({a, b})) == 7);
    CHECK(composite_chi(CompositeGraph::union_of({a, b})) == 4);
    CHECK(composite_chi(CompositeGraph::join_of({CompositeGraph::union_of({a, b}), c})) == 7);

    // supplied values win over declared ones, by depth-first leaf position
    std::vector<std::optional<int>> overrides{std::nullopt, 5};
    CHECK(composite_chi(CompositeGraph::join_of({a, b}), overrides) == 8);

    auto undeclared = CompositeGraph::leaf(cycle_graph(5));
    CHECK_THROWS_AS(composite_chi(CompositeGraph::union_of({a, undeclared})),
                    std::invalid_argument);
    std::vector<std::optional<int>> full{3, 3};
    CHECK(composite_chi(CompositeGraph::union_of({a, undeclared}), full) == 3);
}

TEST_CASE("describe renders the expression tree") {
    auto a = CompositeGraph::leaf(complete_graph(3), 3);
    auto b = CompositeGraph::leaf(cycle_graph(5));
    auto tree = CompositeGraph::join_of({CompositeGraph::union_of({a, b}), a});
    const std::string text = tree.describe();
    CHECK(text.find("join") != std::string::npos);
    CHECK(text.find("union") != std::string::npos);
    CHECK(text.find("leaf v=3 e=3 chi=3") != std::string::npos);
    CHECK(text.find("leaf v=5 e=5") != std::string::npos);
}
