#pragma once

#include "exactcolor/cnf.hpp"
#include "exactcolor/graph.hpp"
#include "exactcolor/reductions.hpp"
#include "exactcolor/solver.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace exactcolor {

struct VerifyOptions {
    std::uint64_t seed = 42;
    int cases = 200; // random cases drawn by corpus-driven campaigns
    int max_variables = 10;
    int max_clauses = 8;
    int variable_cap = kDefaultVariableCap;
    SolverOptions solver;
};

enum class CaseStatus { pass, fail, inconclusive };

struct CaseRecord {
    std::string key;
    std::string input;
    std::string expected;
    std::string observed;
    CaseStatus status = CaseStatus::pass;
};

/// Deterministic work counters; wall-clock time is deliberately absent so a
/// rendered report is bit-identical across runs and machines.
struct SolverStats {
    std::uint64_t solver_calls = 0; // chromatic_number / is_k_colorable invocations
    std::uint64_t search_nodes = 0; // backtracking nodes reported by chromatic_number
    std::uint64_t sat_checks = 0;   // brute-force satisfiability decisions
};

struct CampaignReport {
    std::string campaign;
    std::uint64_t seed = 0;
    std::string config;
    std::vector<CaseRecord> cases;
    SolverStats stats;

    /// True iff every case passed (an inconclusive case is not a pass).
    bool passed() const;
};

/// Line-oriented plain-text rendering: header lines (report-version,
/// campaign, seed, config), one "case:" line per record, then summary
/// counters and the verdict. Reproducible byte-for-byte for a given library
/// build and option set.
std::string render_report(const CampaignReport& report);

/// Random 3-CNF with 1..max_variables variables and 1..max_clauses width-3
/// clauses. Consumes only raw mt19937_64 draws (rejection sampling, no
/// distribution objects), so the stream is identical on every platform.
CnfFormula random_formula(std::mt19937_64& rng, int max_variables, int max_clauses);

/// Uniform vertex count in [min_vertices, max_vertices], then each of the
/// C(n,2) possible edges present with probability 1/2.
Graph random_graph(std::mt19937_64& rng, int min_vertices, int max_vertices);

/// One representative per isomorphism class of simple graphs on n vertices,
/// n <= 5 (1, 1, 2, 4, 11, 34 classes for n = 0..5). Each representative is
/// the lexicographically least adjacency encoding in its class; the list is
/// sorted by that encoding.
std::vector<Graph> enumerate_graphs(int n);

/// Single-case property checks. Each solves exact chromatic numbers with
/// options.solver, classifies the outcome (budget exhaustion is recorded as
/// inconclusive, never as pass or fail) and accumulates work counters.
CaseRecord check_sigma_property(const CnfFormula& phi, const VerifyOptions& options,
                                SolverStats& stats);
CaseRecord check_rho_property(const CnfFormula& phi, const GapReduction& rho_impl,
                              const VerifyOptions& options, SolverStats& stats);
CaseRecord check_join_additivity(const Graph& a, const Graph& b, const VerifyOptions& options,
                                 SolverStats& stats);

/// Checks chi(g) == i <=> (g is i-colorable and not (i-1)-colorable), with
/// 0-colorable meaning empty. For i == 3 the (i-1)-side is cross-checked
/// against is_bipartite.
CaseRecord check_prop1_decomposition(const Graph& g, int i, const VerifyOptions& options,
                                     SolverStats& stats);

enum class ParityMode { compositional, monolithic };

/// Per-campaign drivers. Each draws its corpus from options.seed, runs the
/// per-case checks and aggregates a report.
CampaignReport sigma_campaign(const VerifyOptions& options = {});
CampaignReport rho_campaign(const GapReduction& rho_impl, const VerifyOptions& options = {});
CampaignReport rho_campaign(const VerifyOptions& options = {});

/// Replays the parity argument for every prefix length t in [0, 2k] over
/// canonical chains: builds the combined graph with the given stages, solves
/// for its chromatic number (per-leaf + arithmetic in compositional mode, one
/// flattened solve in monolithic mode) and checks the full biconditional --
/// membership in mk_set(k) iff t is odd, the exact chromatic value predicted
/// by the case analysis, and the structural prefix characterization. k is
/// capped at 3 compositionally and 2 monolithically (solver range).
CampaignReport parity_campaign_with(const GapReduction& odd_stage, const GapReduction& even_stage,
                                    int k, ParityMode mode, const VerifyOptions& options = {});
CampaignReport parity_campaign(int k, ParityMode mode, const VerifyOptions& options = {});

/// check_prop1_decomposition over the canonical 5-vertex catalogue plus
/// options.cases random 6..7-vertex graphs, for every i in 1..6.
CampaignReport prop1_campaign(const VerifyOptions& options = {});

/// Join/union chromatic arithmetic on options.cases random graph pairs and
/// options.cases / 2 random join/union composites (<= 40 vertices), each
/// verified against a flattened solver run.
CampaignReport join_algebra_campaign(const VerifyOptions& options = {});

} // namespace exactcolor
