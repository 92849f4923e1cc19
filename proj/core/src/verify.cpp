#include "exactcolor/verify.hpp"

#include "exactcolor/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace exactcolor {

bool CampaignReport::passed() const {
    return std::all_of(cases.begin(), cases.end(),
                       [](const CaseRecord& c) { return c.status == CaseStatus::pass; });
}

namespace {

const char* status_name(CaseStatus s) {
    switch (s) {
    case CaseStatus::pass: return "pass";
    case CaseStatus::fail: return "fail";
    case CaseStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string key_number(const char* prefix, int i) {
    std::ostringstream out;
    out << prefix << (i < 1000 ? i < 100 ? i < 10 ? "000" : "00" : "0" : "") << i;
    return out.str();
}

std::string formula_brief(const CnfFormula& f) {
    std::ostringstream out;
    out << "n=" << f.variable_count << " m=" << f.clauses.size();
    for (const Clause& clause : f.clauses) {
        out << " (";
        for (size_t i = 0; i < clause.size(); ++i) {
            if (i)
                out << ' ';
            out << (clause[i].positive ? clause[i].variable + 1 : -(clause[i].variable + 1));
        }
        out << ')';
    }
    return out.str();
}

std::string graph_brief(const Graph& g) {
    std::ostringstream out;
    out << "v=" << g.vertex_count() << " e=" << g.edge_count();
    if (g.vertex_count() <= 8) {
        out << " {";
        bool first = true;
        for (auto [u, v] : g.edges()) {
            if (!first)
                out << ',';
            first = false;
            out << u << '-' << v;
        }
        out << '}';
    }
    return out.str();
}

// uniform in [0, bound) from raw engine output; rejection keeps it unbiased
// and platform-independent
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

// chromatic_number wrapper: counts work, maps budget exhaustion to nullopt
std::optional<ChiResult> solve_chi(const Graph& g, const VerifyOptions& options,
                                   SolverStats& stats) {
    ++stats.solver_calls;
    try {
        ChiResult r = chromatic_number(g, options.solver);
        stats.search_nodes += r.search_nodes;
        return r;
    } catch (const LimitError&) {
        return std::nullopt;
    }
}

} // namespace

std::string render_report(const CampaignReport& report) {
    std::ostringstream out;
    out << "report-version: 1\n";
    out << "campaign: " << report.campaign << '\n';
    out << "seed: " << report.seed << '\n';
    out << "config: " << report.config << '\n';
    std::uint64_t pass = 0, fail = 0, inconclusive = 0;
    for (const CaseRecord& c : report.cases) {
        out << "case: " << c.key << " status=" << status_name(c.status) << " input=[" << c.input
            << "] expected=[" << c.expected << "] observed=[" << c.observed << "]\n";
        switch (c.status) {
        case CaseStatus::pass: ++pass; break;
        case CaseStatus::fail: ++fail; break;
        case CaseStatus::inconclusive: ++inconclusive; break;
        }
    }
    out << "cases: " << report.cases.size() << " pass=" << pass << " fail=" << fail
        << " inconclusive=" << inconclusive << '\n';
    out << "solver-calls: " << report.stats.solver_calls << '\n';
    out << "search-nodes: " << report.stats.search_nodes << '\n';
    out << "sat-checks: " << report.stats.sat_checks << '\n';
    out << "verdict: " << (report.passed() ? "pass" : "fail") << '\n';
    return out.str();
}

CnfFormula random_formula(std::mt19937_64& rng, int max_variables, int max_clauses) {
    if (max_variables < 1 || max_clauses < 1)
        throw std::invalid_argument("corpus bounds must be positive");
    CnfFormula f;
    f.variable_count = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_variables)));
    const int m = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_clauses)));
    for (int j = 0; j < m; ++j) {
        Clause clause;
        for (int i = 0; i < 3; ++i) {
            const int var = static_cast<int>(draw(rng, static_cast<std::uint64_t>(f.variable_count)));
            clause.push_back({var, (rng() & 1) != 0});
        }
        f.clauses.push_back(clause);
    }
    return f;
}

Graph random_graph(std::mt19937_64& rng, int min_vertices, int max_vertices) {
    if (min_vertices < 0 || max_vertices < min_vertices)
        throw std::invalid_argument("bad vertex range");
    const int n = min_vertices +
                  static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_vertices - min_vertices + 1)));
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1)
                g.add_edge(u, v);
    return g;
}

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 0 || n > 5)
        throw std::invalid_argument("catalogue enumeration supports 0 <= n <= 5");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.push_back({u, v});
    const int bits = static_cast<int>(pairs.size());
    std::vector<std::vector<int>> pair_index(static_cast<size_t>(n),
                                             std::vector<int>(static_cast<size_t>(n), -1));
    for (int i = 0; i < bits; ++i)
        pair_index[pairs[i].first][pairs[i].second] =
            pair_index[pairs[i].second][pairs[i].first] = i;

    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << bits); ++mask) {
        // emit mask only if it is the least encoding over all relabelings
        bool least = true;
        for (const auto& p : perms) {
            std::uint32_t image = 0;
            for (int i = 0; i < bits; ++i)
                if (mask >> i & 1)
                    image |= std::uint32_t{1} << pair_index[p[pairs[i].first]][p[pairs[i].second]];
            if (image < mask) {
                least = false;
                break;
            }
        }
        if (!least)
            continue;
        Graph g(n);
        for (int i = 0; i < bits; ++i)
            if (mask >> i & 1)
                g.add_edge(pairs[i].first, pairs[i].second);
        out.push_back(std::move(g));
    }
    return out;
}

CaseRecord check_sigma_property(const CnfFormula& phi, const VerifyOptions& options,
                                SolverStats& stats) {
    CaseRecord rec;
    rec.input = formula_brief(phi);
    ++stats.sat_checks;
    const bool sat = brute_force_sat(phi, options.variable_cap).has_value();
    const int expected_chi = sat ? 3 : 4;
    rec.expected = std::string(sat ? "sat" : "unsat") + " chi=" + std::to_string(expected_chi);

    const Graph g = sigma(phi);
    const auto res = solve_chi(g, options, stats);
    if (!res) {
        rec.observed = "undecided";
        rec.status = CaseStatus::inconclusive;
        return rec;
    }
    const bool witness_ok = validate_coloring(g, res->witness, res->chi);
    rec.observed = "chi=" + std::to_string(res->chi) + (witness_ok ? "" : " bad-witness");
    rec.status = res->chi == expected_chi && witness_ok ? CaseStatus::pass : CaseStatus::fail;
    return rec;
}

CaseRecord check_rho_property(const CnfFormula& phi, const GapReduction& rho_impl,
                              const VerifyOptions& options, SolverStats& stats) {
    CaseRecord rec;
    rec.input = formula_brief(phi);
    ++stats.sat_checks;
    const bool sat = brute_force_sat(phi, options.variable_cap).has_value();
    const int expected_chi = sat ? rho_impl.sat_chi : rho_impl.unsat_chi;
    rec.expected = std::string(sat ? "sat" : "unsat") + " chi=" + std::to_string(expected_chi);

    const Graph g = rho_impl.apply(phi);
    const auto res = solve_chi(g, options, stats);
    if (!res) {
        rec.observed = "undecided";
        rec.status = CaseStatus::inconclusive;
        return rec;
    }
    const bool witness_ok = validate_coloring(g, res->witness, res->chi);
    rec.observed = "chi=" + std::to_string(res->chi) +
                   " lower0=" + std::to_string(res->bounds_history.front().first) +
                   (witness_ok ? "" : " bad-witness");
    rec.status = res->chi == expected_chi && witness_ok ? CaseStatus::pass : CaseStatus::fail;
    return rec;
}

CaseRecord check_join_additivity(const Graph& a, const Graph& b, const VerifyOptions& options,
                                 SolverStats& stats) {
    CaseRecord rec;
    rec.input = "A[" + graph_brief(a) + "] B[" + graph_brief(b) + "]";
    const auto ca = solve_chi(a, options, stats);
    const auto cb = solve_chi(b, options, stats);
    const auto cj = solve_chi(join(a, b), options, stats);
    const auto cu = solve_chi(disjoint_union(a, b), options, stats);
    if (!ca || !cb || !cj || !cu) {
        rec.observed = "undecided";
        rec.status = CaseStatus::inconclusive;
        return rec;
    }
    rec.expected = "join=" + std::to_string(ca->chi + cb->chi) +
                   " union=" + std::to_string(std::max(ca->chi, cb->chi));
    rec.observed = "join=" + std::to_string(cj->chi) + " union=" + std::to_string(cu->chi);
    rec.status = cj->chi == ca->chi + cb->chi && cu->chi == std::max(ca->chi, cb->chi)
                     ? CaseStatus::pass
                     : CaseStatus::fail;
    return rec;
}

CaseRecord check_prop1_decomposition(const Graph& g, int i, const VerifyOptions& options,
                                     SolverStats& stats) {
    if (i < 1)
        throw std::invalid_argument("i must be at least 1");
    CaseRecord rec;
    rec.input = graph_brief(g) + " i=" + std::to_string(i);
    const auto res = solve_chi(g, options, stats);
    if (!res) {
        rec.observed = "undecided";
        rec.status = CaseStatus::inconclusive;
        return rec;
    }
    std::optional<Coloring> at_i, below;
    try {
        ++stats.solver_calls;
        at_i = is_k_colorable(g, i, options.solver);
        ++stats.solver_calls;
        below = is_k_colorable(g, i - 1, options.solver);
    } catch (const LimitError&) {
        rec.observed = "undecided";
        rec.status = CaseStatus::inconclusive;
        return rec;
    }
    const bool lhs = res->chi == i;
    const bool rhs = at_i.has_value() && !below.has_value();
    bool ok = lhs == rhs;
    std::string note;
    if (i == 3) {
        const bool two_colorable = below.has_value();
        const bool bipartite = is_bipartite(g).has_value();
        if (two_colorable != bipartite) {
            ok = false;
            note = " bipartite-mismatch";
        }
    }
    rec.expected = "chi==i <=> (i-colorable and not (i-1)-colorable)";
    rec.observed = "chi=" + std::to_string(res->chi) + " at-i=" + (at_i ? "yes" : "no") +
                   " below=" + (below ? "yes" : "no") + note;
    rec.status = ok ? CaseStatus::pass : CaseStatus::fail;
    return rec;
}

namespace {

std::string solver_config(const VerifyOptions& o) {
    return "node-budget=" + std::to_string(o.solver.node_budget);
}

std::string corpus_config(const VerifyOptions& o) {
    return "cases=" + std::to_string(o.cases) + " max-vars=" + std::to_string(o.max_variables) +
           " max-clauses=" + std::to_string(o.max_clauses) +
           " var-cap=" + std::to_string(o.variable_cap) + ' ' + solver_config(o);
}

} // namespace

CampaignReport sigma_campaign(const VerifyOptions& options) {
    CampaignReport report;
    report.campaign = "sigma";
    report.seed = options.seed;
    report.config = corpus_config(options);
    std::mt19937_64 rng(options.seed);
    for (int i = 1; i <= options.cases; ++i) {
        const CnfFormula phi = random_formula(rng, options.max_variables, options.max_clauses);
        CaseRecord rec = check_sigma_property(phi, options, report.stats);
        rec.key = key_number("", i);
        report.cases.push_back(std::move(rec));
    }
    return report;
}

CampaignReport rho_campaign(const GapReduction& rho_impl, const VerifyOptions& options) {
    CampaignReport report;
    report.campaign = "rho-" + rho_impl.name;
    report.seed = options.seed;
    report.config = corpus_config(options);
    std::mt19937_64 rng(options.seed);
    for (int i = 1; i <= options.cases; ++i) {
        const CnfFormula phi = random_formula(rng, options.max_variables, options.max_clauses);
        CaseRecord rec = check_rho_property(phi, rho_impl, options, report.stats);
        rec.key = key_number("", i);
        report.cases.push_back(std::move(rec));
    }
    return report;
}

CampaignReport rho_campaign(const VerifyOptions& options) {
    return rho_campaign(rho_reduction(), options);
}

CampaignReport parity_campaign_with(const GapReduction& odd_stage, const GapReduction& even_stage,
                                    int k, ParityMode mode, const VerifyOptions& options) {
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
    if (mode == ParityMode::compositional && k > 3)
        throw std::invalid_argument("compositional parity supports k <= 3");
    if (mode == ParityMode::monolithic && k > 2)
        throw std::invalid_argument("monolithic parity supports k <= 2");

    CampaignReport report;
    report.campaign = "parity-k" + std::to_string(k) +
                      (mode == ParityMode::monolithic ? "-monolithic" : "-compositional") +
                      (odd_stage.name == "rho" && even_stage.name == "sigma"
                           ? ""
                           : "-" + odd_stage.name + "+" + even_stage.name);
    report.seed = options.seed;
    report.config = "k=" + std::to_string(k) +
                    " mode=" + (mode == ParityMode::monolithic ? "monolithic" : "compositional") +
                    ' ' + solver_config(options);
    const MkSet target = mk_set(k);

    for (int t = 0; t <= 2 * k; ++t) {
        CaseRecord rec;
        rec.key = "t" + std::to_string(t);
        const MonotoneChain chain = canonical_chain(k, t);

        std::vector<bool> flags(chain.formulas.size());
        for (size_t j = 0; j < chain.formulas.size(); ++j) {
            ++report.stats.sat_checks;
            flags[j] = brute_force_sat(chain.formulas[j], options.variable_cap).has_value();
        }
        std::string flag_text;
        for (bool f : flags)
            flag_text += f ? '1' : '0';
        rec.input = "t=" + std::to_string(t) + " flags=" + flag_text;

        // structural side: satisfiable formulas form a prefix, and the
        // odd/even boundary pattern appears iff the prefix length is odd
        const bool monotone = is_monotone_chain(chain.formulas, options.variable_cap);
        report.stats.sat_checks += flags.size();
        bool boundary = false;
        for (int i = 1; i <= k; ++i)
            boundary = boundary || (flags[2 * i - 2] && !flags[2 * i - 1]);
        const bool parity_odd = t % 2 == 1;
        const bool structural_ok = monotone && boundary == parity_odd;

        // chromatic side: expected value from the declared gap case analysis
        int expected_chi = 0;
        for (int i = 0; i < k; ++i)
            expected_chi += std::max(flags[2 * i] ? 3 : 5, flags[2 * i + 1] ? 3 : 4);
        const bool expected_member = target.contains(expected_chi);
        rec.expected = "chi=" + std::to_string(expected_chi) +
                       " member=" + (parity_odd ? "yes" : "no");

        const CompositeGraph combined = combine_with(chain, odd_stage, even_stage);
        std::optional<int> chi;
        if (mode == ParityMode::compositional) {
            std::vector<std::optional<int>> leaf_chi;
            bool undecided = false;
            for (const Graph* leaf : combined.leaves()) {
                const auto res = solve_chi(*leaf, options, report.stats);
                if (!res) {
                    undecided = true;
                    break;
                }
                leaf_chi.push_back(res->chi);
            }
            if (!undecided)
                chi = composite_chi(combined, leaf_chi);
        } else {
            const auto res = solve_chi(combined.flatten(), options, report.stats);
            if (res)
                chi = res->chi;
        }
        if (!chi) {
            rec.observed = "undecided";
            rec.status = CaseStatus::inconclusive;
            report.cases.push_back(std::move(rec));
            continue;
        }

        const bool member = target.contains(*chi);
        rec.observed = "chi=" + std::to_string(*chi) + " member=" + (member ? "yes" : "no") +
                       " structural=" + (structural_ok ? "ok" : "broken");
        bool ok = structural_ok && member == parity_odd && *chi == expected_chi &&
                  expected_member == parity_odd;
        if (parity_odd) {
            const int i = (t + 1) / 2;
            ok = ok && *chi == 5 * k - 2 * i + 1;
        }
        rec.status = ok ? CaseStatus::pass : CaseStatus::fail;
        report.cases.push_back(std::move(rec));
    }
    return report;
}

CampaignReport parity_campaign(int k, ParityMode mode, const VerifyOptions& options) {
    return parity_campaign_with(rho_reduction(), sigma_reduction(), k, mode, options);
}

CampaignReport prop1_campaign(const VerifyOptions& options) {
    CampaignReport report;
    report.campaign = "prop1";
    report.seed = options.seed;
    report.config = "cases=" + std::to_string(options.cases) + " i=1..6 " + solver_config(options);
    std::mt19937_64 rng(options.seed);
    std::vector<std::pair<std::string, Graph>> corpus;
    {
        auto catalogue = enumerate_graphs(5);
        for (size_t c = 0; c < catalogue.size(); ++c)
            corpus.push_back({key_number("canon", static_cast<int>(c) + 1),
                              std::move(catalogue[c])});
    }
    for (int i = 1; i <= options.cases; ++i)
        corpus.push_back({key_number("rand", i), random_graph(rng, 6, 7)});

    for (const auto& [name, g] : corpus) {
        for (int i = 1; i <= 6; ++i) {
            CaseRecord rec = check_prop1_decomposition(g, i, options, report.stats);
            rec.key = name + "-i" + std::to_string(i);
            report.cases.push_back(std::move(rec));
        }
    }
    return report;
}

namespace {

CompositeGraph random_composite_subtree(std::mt19937_64& rng, int depth) {
    if (depth >= 2 || draw(rng, 4) == 0)
        return CompositeGraph::leaf(random_graph(rng, 1, 4));
    const int fanout = 2 + static_cast<int>(draw(rng, 2));
    std::vector<CompositeGraph> kids;
    kids.reserve(static_cast<size_t>(fanout));
    for (int i = 0; i < fanout; ++i)
        kids.push_back(random_composite_subtree(rng, depth + 1));
    return draw(rng, 2) == 0 ? CompositeGraph::join_of(std::move(kids))
                             : CompositeGraph::union_of(std::move(kids));
}

// root is always an internal node; <= 3 * 3 * 4 = 36 vertices by construction
CompositeGraph random_composite(std::mt19937_64& rng) {
    const int fanout = 2 + static_cast<int>(draw(rng, 2));
    std::vector<CompositeGraph> kids;
    kids.reserve(static_cast<size_t>(fanout));
    for (int i = 0; i < fanout; ++i)
        kids.push_back(random_composite_subtree(rng, 1));
    return draw(rng, 2) == 0 ? CompositeGraph::join_of(std::move(kids))
                             : CompositeGraph::union_of(std::move(kids));
}

} // namespace

CampaignReport join_algebra_campaign(const VerifyOptions& options) {
    CampaignReport report;
    report.campaign = "join-algebra";
    report.seed = options.seed;
    report.config = "pairs=" + std::to_string(options.cases) +
                    " composites=" + std::to_string(options.cases / 2) + ' ' +
                    solver_config(options);
    std::mt19937_64 rng(options.seed);

    for (int i = 1; i <= options.cases; ++i) {
        const Graph a = random_graph(rng, 0, 6);
        const Graph b = random_graph(rng, 0, 6);
        CaseRecord rec = check_join_additivity(a, b, options, report.stats);
        rec.key = key_number("pair", i);
        report.cases.push_back(std::move(rec));
    }

    for (int i = 1; i <= options.cases / 2; ++i) {
        const CompositeGraph c = random_composite(rng);
        CaseRecord rec;
        rec.key = key_number("comp", i);
        rec.input = "leaves=" + std::to_string(c.leaf_count()) +
                    " v=" + std::to_string(c.vertex_count());

        std::vector<std::optional<int>> leaf_chi;
        bool undecided = false;
        for (const Graph* leaf : c.leaves()) {
            const auto res = solve_chi(*leaf, options, report.stats);
            if (!res) {
                undecided = true;
                break;
            }
            leaf_chi.push_back(res->chi);
        }
        const auto flat = undecided ? std::nullopt : solve_chi(c.flatten(), options, report.stats);
        if (undecided || !flat) {
            rec.observed = "undecided";
            rec.status = CaseStatus::inconclusive;
            report.cases.push_back(std::move(rec));
            continue;
        }
        const int arithmetic = composite_chi(c, leaf_chi);
        rec.expected = "chi=" + std::to_string(arithmetic);
        rec.observed = "chi=" + std::to_string(flat->chi);
        rec.status = arithmetic == flat->chi ? CaseStatus::pass : CaseStatus::fail;
        report.cases.push_back(std::move(rec));
    }
    return report;
}

} // namespace exactcolor
