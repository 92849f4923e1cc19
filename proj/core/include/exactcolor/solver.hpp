#pragma once

#include "exactcolor/graph.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace exactcolor {

struct SolverOptions {
    /// Total color-assignment decisions a single call may spend before giving
    /// up with an explicit "undecided" error.
    std::uint64_t node_budget = 100'000'000;
};

/// Result of an exact chromatic-number computation. The witness is a proper
/// coloring with colors_used == chi; the clique is the greedy lower-bound
/// certificate found before search (pairwise adjacent vertices, ascending).
/// bounds_history records the (lower, upper) brackets in the order they were
/// established, ending with lower == upper == chi.
struct ChiResult {
    int chi = 0;
    Coloring witness;
    std::vector<int> clique;
    std::vector<std::pair<int, int>> bounds_history;
    std::uint64_t search_nodes = 0;

    friend bool operator==(const ChiResult&, const ChiResult&) = default;
};

/// 2-coloring via BFS layering, or nullopt if an odd cycle exists. The
/// returned coloring uses color 0 for each component's BFS root; an edgeless
/// graph yields colors_used == 1 (0 when there are no vertices).
std::optional<Coloring> is_bipartite(const Graph& g);

/// Deterministic greedy clique: seed each vertex in (degree descending, index
/// ascending) order and extend through that same order; the first strictly
/// largest clique wins. Returned ascending. Size is a lower bound on chi.
std::vector<int> clique_lower_bound(const Graph& g);

/// DSATUR greedy upper bound: repeatedly color the uncolored vertex with the
/// most distinctly-colored neighbors (ties: higher degree, then lower index)
/// with the least feasible color. Exact on bipartite graphs.
std::pair<int, Coloring> dsatur_upper_bound(const Graph& g);

/// Backtracking decision procedure: a proper k-coloring, or nullopt when none
/// exists. k = 0 is allowed (only the empty graph qualifies). Exceeding the
/// node budget throws LimitError.
std::optional<Coloring> is_k_colorable(const Graph& g, int k, const SolverOptions& options = {});

/// Exact chromatic number: bipartite shortcut, then upward search from
/// max(greedy clique, 3) to the DSATUR bound, sharing options.node_budget
/// across all attempts. Budget exhaustion throws UndecidedError carrying the
/// bracketing bounds. Deterministic: identical inputs yield identical
/// results, including the witness and the node count.
ChiResult chromatic_number(const Graph& g, const SolverOptions& options = {});

} // namespace exactcolor
