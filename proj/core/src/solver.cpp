#include "exactcolor/solver.hpp"

#include "exactcolor/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace exactcolor {

std::optional<Coloring> is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    const auto adj = g.adjacency();
    std::vector<int> color(static_cast<size_t>(n), -1);
    std::queue<int> frontier;
    for (int start = 0; start < n; ++start) {
        if (color[start] != -1)
            continue;
        color[start] = 0;
        frontier.push(start);
        while (!frontier.empty()) {
            const int v = frontier.front();
            frontier.pop();
            for (int u : adj[v]) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    frontier.push(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    int used = 0;
    for (int c : color)
        used = std::max(used, c + 1);
    return Coloring{std::move(color), used};
}

std::vector<int> clique_lower_bound(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0)
        return {};
    const auto adj = g.adjacency();
    const auto degree = g.degrees();
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return degree[a] > degree[b]; });

    std::vector<char> in_clique(static_cast<size_t>(n), 0);
    std::vector<int> best;
    for (int seed : order) {
        std::vector<int> clique{seed};
        std::fill(in_clique.begin(), in_clique.end(), 0);
        in_clique[seed] = 1;
        for (int u : order) {
            if (in_clique[u])
                continue;
            bool adjacent_to_all = true;
            for (int w : clique) {
                if (!g.has_edge(u, w)) {
                    adjacent_to_all = false;
                    break;
                }
            }
            if (adjacent_to_all) {
                clique.push_back(u);
                in_clique[u] = 1;
            }
        }
        if (clique.size() > best.size())
            best = std::move(clique);
    }
    std::sort(best.begin(), best.end());
    return best;
}

namespace {

// Shared state for the DSATUR selection rule: most saturated first, then
// higher degree, then lower index. Scanning indices upward makes the
// lowest-index tie-break implicit.
struct ColorState {
    int n;
    int palette; // colors available
    const std::vector<std::vector<int>>& adj;
    const std::vector<int>& degree;
    std::vector<int> color;
    std::vector<int> saturation;
    std::vector<std::vector<int>> neighbor_count; // [v][c] colored neighbors with color c
    int uncolored;

    ColorState(const Graph& g, int palette_size, const std::vector<std::vector<int>>& adjacency,
               const std::vector<int>& degrees)
        : n(g.vertex_count()),
          palette(palette_size),
          adj(adjacency),
          degree(degrees),
          color(static_cast<size_t>(n), -1),
          saturation(static_cast<size_t>(n), 0),
          neighbor_count(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(palette_size), 0)),
          uncolored(n) {}

    int select() const {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] != -1)
                continue;
            if (best == -1 || saturation[v] > saturation[best] ||
                (saturation[v] == saturation[best] && degree[v] > degree[best]))
                best = v;
        }
        return best;
    }

    void assign(int v, int c) {
        color[v] = c;
        --uncolored;
        for (int u : adj[v])
            if (color[u] == -1 && neighbor_count[u][c]++ == 0)
                ++saturation[u];
    }

    void unassign(int v) {
        const int c = color[v];
        color[v] = -1;
        ++uncolored;
        for (int u : adj[v])
            if (color[u] == -1 && --neighbor_count[u][c] == 0)
                --saturation[u];
    }
};

struct BudgetExhausted {};

// Backtracking k-colorability with clique precoloring and first-fresh-color
// symmetry breaking: a vertex may only take an already-used color or the one
// fresh color after them. `nodes` counts attempted assignments across calls
// and is checked against `budget` before each.
//
// Failures are propagated with conflict-directed backjumping. Each level
// accumulates a conflict set: one assigned blocker per excluded color, plus
// the (self-removed) conflict sets of failed child subtrees. A child failure
// whose conflict set does not mention the current vertex proves every one of
// its values futile, so the level rethrows the set unchanged instead of
// trying further colors. Conflict sets certify full-space infeasibility, so
// whenever the fresh-color cap actually restricted a candidate list (some
// palette color was neither tried nor blocked) the failure is marked
// `complete` -- dependent on everything -- and falls back to chronological
// behaviour. That only happens until all palette colors are in use, i.e. in
// a shallow prefix of the tree.
class Searcher {
public:
    Searcher(const Graph& g, int palette, const std::vector<int>& clique,
             const std::vector<std::vector<int>>& adj, const std::vector<int>& degree,
             std::uint64_t& nodes, std::uint64_t budget)
        : state_(g, palette, adj, degree),
          nodes_(nodes),
          budget_(budget),
          n_(g.vertex_count()),
          conflict_(static_cast<size_t>(g.vertex_count()) + 1,
                    std::vector<char>(static_cast<size_t>(g.vertex_count()), 0)),
          complete_(static_cast<size_t>(g.vertex_count()) + 1, 0) {
        used_ = 0;
        for (int v : clique)
            state_.assign(v, used_++);
    }

    std::optional<std::vector<int>> run() {
        if (!dfs(0))
            return std::nullopt;
        return state_.color;
    }

private:
    bool dfs(int depth) {
        if (state_.uncolored == 0)
            return true;
        const int v = state_.select();
        auto& cs = conflict_[depth];
        std::fill(cs.begin(), cs.end(), 0);
        bool poisoned = false;
        const bool cap_active = used_ + 1 < state_.palette;
        const int limit = std::min(state_.palette, used_ + 1);
        for (int c = 0; c < limit; ++c) {
            if (state_.neighbor_count[v][c] != 0) {
                // one assigned blocker certifies this color's exclusion
                for (int u : state_.adj[v]) {
                    if (state_.color[u] == c) {
                        cs[u] = 1;
                        break;
                    }
                }
                continue;
            }
            if (++nodes_ > budget_)
                throw BudgetExhausted{};
            const int saved_used = used_;
            if (c == used_)
                ++used_;
            state_.assign(v, c);
            if (dfs(depth + 1))
                return true;
            state_.unassign(v);
            used_ = saved_used;
            if (complete_[depth + 1]) {
                poisoned = true;
                continue;
            }
            auto& child = conflict_[depth + 1];
            if (!child[v]) {
                // failure below did not involve v: jump past this level
                std::swap(cs, child);
                complete_[depth] = 0;
                return false;
            }
            for (int u = 0; u < n_; ++u)
                cs[u] = static_cast<char>(cs[u] | child[u]);
            cs[v] = 0;
        }
        complete_[depth] = poisoned || cap_active;
        return false;
    }

    ColorState state_;
    int used_;
    std::uint64_t& nodes_;
    std::uint64_t budget_;
    int n_;
    std::vector<std::vector<char>> conflict_;
    std::vector<char> complete_;
};

Coloring to_coloring(std::vector<int> assignment) {
    int used = 0;
    for (int c : assignment)
        used = std::max(used, c + 1);
    return Coloring{std::move(assignment), used};
}

} // namespace

std::pair<int, Coloring> dsatur_upper_bound(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0)
        return {0, Coloring{}};
    const auto adj = g.adjacency();
    const auto degree = g.degrees();
    ColorState state(g, n, adj, degree);
    while (state.uncolored > 0) {
        const int v = state.select();
        int c = 0;
        while (state.neighbor_count[v][c] != 0)
            ++c;
        state.assign(v, c);
    }
    Coloring coloring = to_coloring(std::move(state.color));
    return {coloring.colors_used, std::move(coloring)};
}

std::optional<Coloring> is_k_colorable(const Graph& g, int k, const SolverOptions& options) {
    if (k < 0)
        throw std::invalid_argument("negative color count");
    const int n = g.vertex_count();
    if (n == 0)
        return Coloring{};
    if (k == 0)
        return std::nullopt;
    const auto clique = clique_lower_bound(g);
    if (static_cast<int>(clique.size()) > k)
        return std::nullopt;
    const auto adj = g.adjacency();
    const auto degree = g.degrees();
    std::uint64_t nodes = 0;
    try {
        Searcher searcher(g, std::min(k, n), clique, adj, degree, nodes, options.node_budget);
        auto assignment = searcher.run();
        if (!assignment)
            return std::nullopt;
        return to_coloring(std::move(*assignment));
    } catch (const BudgetExhausted&) {
        throw LimitError("node budget exhausted deciding " + std::to_string(k) +
                         "-colorability");
    }
}

ChiResult chromatic_number(const Graph& g, const SolverOptions& options) {
    ChiResult result;
    const int n = g.vertex_count();
    if (n == 0) {
        result.bounds_history.push_back({0, 0});
        return result;
    }
    result.clique = clique_lower_bound(g);
    if (g.edge_count() == 0) {
        result.chi = 1;
        result.witness = Coloring{std::vector<int>(static_cast<size_t>(n), 0), 1};
        result.bounds_history.push_back({1, 1});
        return result;
    }
    if (auto two = is_bipartite(g)) {
        result.chi = 2;
        result.witness = std::move(*two);
        result.bounds_history.push_back({2, 2});
        return result;
    }

    const int lower = std::max(static_cast<int>(result.clique.size()), 3);
    auto [upper, greedy] = dsatur_upper_bound(g);
    result.bounds_history.push_back({lower, upper});
    if (lower == upper) {
        result.chi = upper;
        result.witness = std::move(greedy);
        return result;
    }

    const auto adj = g.adjacency();
    const auto degree = g.degrees();
    int attempt = lower;
    try {
        for (; attempt < upper; ++attempt) {
            Searcher searcher(g, attempt, result.clique, adj, degree, result.search_nodes,
                              options.node_budget);
            if (auto assignment = searcher.run()) {
                result.chi = attempt;
                result.witness = to_coloring(std::move(*assignment));
                result.bounds_history.push_back({attempt, attempt});
                return result;
            }
            result.bounds_history.push_back({attempt + 1, upper});
        }
    } catch (const BudgetExhausted&) {
        throw UndecidedError(attempt, upper);
    }
    result.chi = upper;
    result.witness = std::move(greedy);
    return result;
}

} // namespace exactcolor
