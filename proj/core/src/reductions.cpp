#include "exactcolor/reductions.hpp"

#include "exactcolor/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace exactcolor {

namespace {

// OR gadget: five edges over {a, b, u, w, out} such that in any proper
// 3-coloring with a, b colored T-or-F, out can be colored T iff a or b is,
// and is forced to F's color when both are F.
void add_or_gadget(Graph& g, int a, int b, int u, int w, int out) {
    g.add_edge(a, u);
    g.add_edge(b, w);
    g.add_edge(u, w);
    g.add_edge(u, out);
    g.add_edge(w, out);
}

} // namespace

Graph sigma(const CnfFormula& phi) {
    validate(phi);
    const int n = phi.variable_count;
    const int m = static_cast<int>(phi.clauses.size());

    Graph g(3 + 2 * n + 6 * m);
    const int T = 0, F = 1, B = 2;
    g.set_label(T, "sigma/palette/T");
    g.set_label(F, "sigma/palette/F");
    g.set_label(B, "sigma/palette/B");
    g.add_edge(T, F);
    g.add_edge(T, B);
    g.add_edge(F, B);

    const auto pos = [](int v) { return 3 + 2 * v; };
    const auto neg = [](int v) { return 4 + 2 * v; };
    for (int v = 0; v < n; ++v) {
        g.set_label(pos(v), "sigma/x" + std::to_string(v + 1));
        g.set_label(neg(v), "sigma/!x" + std::to_string(v + 1));
        g.add_edge(pos(v), neg(v));
        g.add_edge(pos(v), B);
        g.add_edge(neg(v), B);
    }

    const auto literal_vertex = [&](const Literal& lit) {
        return lit.positive ? pos(lit.variable) : neg(lit.variable);
    };
    for (int j = 0; j < m; ++j) {
        Clause clause = phi.clauses[j];
        while (clause.size() < 3)
            clause.push_back(clause.front());
        const int base = 3 + 2 * n + 6 * j;
        const int u1 = base, w1 = base + 1, o1 = base + 2;
        const int u2 = base + 3, w2 = base + 4, out = base + 5;
        const std::string tag = "sigma/c" + std::to_string(j + 1);
        g.set_label(u1, tag + "/or1/u");
        g.set_label(w1, tag + "/or1/w");
        g.set_label(o1, tag + "/or1/out");
        g.set_label(u2, tag + "/or2/u");
        g.set_label(w2, tag + "/or2/w");
        g.set_label(out, tag + "/out");

        add_or_gadget(g, literal_vertex(clause[0]), literal_vertex(clause[1]), u1, w1, o1);
        add_or_gadget(g, o1, literal_vertex(clause[2]), u2, w2, out);
        g.add_edge(out, F);
        g.add_edge(out, B);
    }
    return g;
}

Graph rho_oracle(const CnfFormula& phi, int variable_cap) {
    const auto model = brute_force_sat(phi, variable_cap);
    const std::string tag = "rho(" + std::string(model ? "sat" : "unsat") +
                            ",n=" + std::to_string(phi.variable_count) +
                            ",m=" + std::to_string(phi.clauses.size()) + ")";
    if (model) {
        Graph g = complete_graph(3);
        for (int v = 0; v < 3; ++v)
            g.set_label(v, tag + "/k3/" + std::to_string(v + 1));
        return g;
    }
    Graph g = join(cycle_graph(5), complete_graph(2));
    for (int v = 0; v < 5; ++v)
        g.set_label(v, tag + "/c5/" + std::to_string(v + 1));
    for (int v = 0; v < 2; ++v)
        g.set_label(5 + v, tag + "/k2/" + std::to_string(v + 1));
    return g;
}

const GapReduction& sigma_reduction() {
    static const GapReduction r{"sigma", 3, 4, [](const CnfFormula& f) { return sigma(f); }};
    return r;
}

const GapReduction& rho_reduction() {
    static const GapReduction r{"rho", 3, 5, [](const CnfFormula& f) { return rho_oracle(f); }};
    return r;
}

bool MkSet::contains(int chi) const {
    return std::binary_search(members.begin(), members.end(), chi);
}

MkSet mk_set(int k) {
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
    MkSet m{k, {}};
    m.members.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        m.members.push_back(3 * k + 1 + 2 * i);
    return m;
}

CompositeGraph combine_with(const MonotoneChain& chain, const GapReduction& odd_stage,
                            const GapReduction& even_stage) {
    const int k = chain.k;
    if (k < 1 || static_cast<int>(chain.formulas.size()) != 2 * k)
        throw std::invalid_argument("chain must hold exactly 2k formulas, k >= 1");
    std::vector<CompositeGraph> pairs;
    pairs.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        Graph odd = prefix_labels(odd_stage.apply(chain.formulas[2 * i]),
                                  "phi" + std::to_string(2 * i + 1) + "/");
        Graph even = prefix_labels(even_stage.apply(chain.formulas[2 * i + 1]),
                                   "phi" + std::to_string(2 * i + 2) + "/");
        pairs.push_back(CompositeGraph::union_of(
            {CompositeGraph::leaf(std::move(odd)), CompositeGraph::leaf(std::move(even))}));
    }
    if (k == 1)
        return std::move(pairs.front());
    return CompositeGraph::join_of(std::move(pairs));
}

CompositeGraph wagner_combine(const MonotoneChain& chain) {
    return combine_with(chain, rho_reduction(), sigma_reduction());
}

bool exact_mk_member(const Graph& g, const MkSet& m, const SolverOptions& options) {
    return m.contains(chromatic_number(g, options).chi);
}

} // namespace exactcolor
