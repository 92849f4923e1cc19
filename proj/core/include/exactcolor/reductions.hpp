#pragma once

#include "exactcolor/cnf.hpp"
#include "exactcolor/composite.hpp"
#include "exactcolor/graph.hpp"
#include "exactcolor/solver.hpp"

#include <functional>
#include <string>
#include <vector>

namespace exactcolor {

/// Clause-gadget reduction from 3-CNF to graphs with the chromatic gap
/// {3, 4}: the output is 3-chromatic when the formula is satisfiable and
/// 4-chromatic otherwise.
///
/// Construction: a palette triangle {T, F, B}; per variable x a triangle
/// {x, !x, B}, so exactly one of x, !x takes T's color under any 3-coloring;
/// per clause two chained OR gadgets (five fresh vertices each stage shares)
/// whose output vertex is forced to F's color exactly when all three literal
/// inputs are, plus edges from the clause output to F and B. Clauses narrower
/// than 3 are widened by repeating their first literal. Vertex labels record
/// the role of every vertex.
Graph sigma(const CnfFormula& phi);

/// Decision-oracle reduction with the chromatic gap {3, 5}: decides the
/// formula by brute force (LimitError past `variable_cap` variables), then
/// emits a triangle when satisfiable and the join of a 5-cycle with an edge
/// when not. The join output is 5-chromatic but contains no 5-clique (its
/// largest clique has 4 vertices), so exact solvers cannot certify it by
/// clique bound alone.
Graph rho_oracle(const CnfFormula& phi, int variable_cap = kDefaultVariableCap);

/// A formula-to-graph reduction together with its declared chromatic gap:
/// applying it to a satisfiable formula yields a sat_chi-chromatic graph, to
/// an unsatisfiable one an unsat_chi-chromatic graph.
struct GapReduction {
    std::string name;
    int sat_chi = 0;
    int unsat_chi = 0;
    std::function<Graph(const CnfFormula&)> apply;
};

const GapReduction& sigma_reduction();
const GapReduction& rho_reduction();

/// The target chromatic-number set M_k = {3k+1, 3k+3, ..., 5k-1}: k values,
/// step 2, every second value in [3k+1, 5k-1].
struct MkSet {
    int k = 0;
    std::vector<int> members;

    bool contains(int chi) const;
};

MkSet mk_set(int k);

/// The parity combiner: for a monotone chain phi_1 >= ... >= phi_2k, pairs
/// consecutive formulas as union(odd_stage(phi_{2i-1}), even_stage(phi_{2i}))
/// and joins the k pair graphs. Leaf vertex labels gain a "phi<j>/" prefix.
/// With the gaps {3,5} (odd) and {3,4} (even), the chromatic number of the
/// result lands in mk_set(k) exactly when the number of satisfiable formulas
/// in the chain is odd. For k = 1 the single pair graph is returned without
/// an enclosing join.
CompositeGraph combine_with(const MonotoneChain& chain, const GapReduction& odd_stage,
                            const GapReduction& even_stage);

/// combine_with over the canonical stages: rho_reduction() odd,
/// sigma_reduction() even.
CompositeGraph wagner_combine(const MonotoneChain& chain);

/// Exact membership test: solves for chi(g) and checks it against m.
bool exact_mk_member(const Graph& g, const MkSet& m, const SolverOptions& options = {});

} // namespace exactcolor
