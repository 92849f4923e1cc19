// exactcolor -- command-line front end for the exact-chromatic-number toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input errors,
// 3 resource limit hit (brute-force variable cap or solver node budget).

#include "exactcolor/cnf.hpp"
#include "exactcolor/composite.hpp"
#include "exactcolor/errors.hpp"
#include "exactcolor/graph.hpp"
#include "exactcolor/graph_io.hpp"
#include "exactcolor/reductions.hpp"
#include "exactcolor/solver.hpp"
#include "exactcolor/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

std::string coloring_line(const exactcolor::Coloring& c) {
    std::ostringstream out;
    out << "coloring";
    for (int color : c.assignment)
        out << ' ' << color;
    out << '\n';
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    using namespace exactcolor;

    CLI::App app{"exact chromatic-number toolkit: clause-gadget and oracle "
                 "reductions, join/union composition, exact solving, and "
                 "verification campaigns"};
    app.require_subcommand(1);
    app.fallthrough();

    SolverOptions solver;
    int var_cap = kDefaultVariableCap;
    app.add_option("--node-budget", solver.node_budget,
                   "backtracking node budget per solver call")
        ->envname("EXACTCOLOR_NODE_BUDGET")
        ->capture_default_str();
    app.add_option("--var-cap", var_cap, "brute-force satisfiability variable cap")
        ->capture_default_str();

    // reduce
    auto* reduce = app.add_subcommand("reduce", "apply a formula-to-graph reduction");
    std::string reduce_kind, reduce_input, reduce_out;
    bool reduce_dot = false;
    reduce->add_option("kind", reduce_kind, "sigma | rho")
        ->required()
        ->check(CLI::IsMember({"sigma", "rho"}));
    reduce->add_option("input", reduce_input, "DIMACS CNF file")->required();
    reduce->add_flag("--dot", reduce_dot, "emit Graphviz DOT instead of DIMACS");
    reduce->add_option("-o,--output", reduce_out, "write to file instead of stdout");

    // combine
    auto* combine = app.add_subcommand("combine", "combine a monotone 2k-chain of formulas");
    int combine_k = 1;
    std::vector<std::string> combine_inputs;
    std::string combine_out;
    bool combine_composite = false;
    combine->add_option("-k", combine_k, "number of formula pairs")->required();
    combine->add_option("inputs", combine_inputs, "2k DIMACS CNF files, strongest first")
        ->required();
    combine->add_flag("--composite", combine_composite,
                      "print the expression tree instead of the flattened graph");
    combine->add_option("-o,--output", combine_out, "write to file instead of stdout");

    // chi
    auto* chi_cmd = app.add_subcommand("chi", "exact chromatic number of a graph");
    std::string chi_input, chi_out;
    bool chi_dot = false;
    chi_cmd->add_option("input", chi_input, "DIMACS edge file")->required();
    chi_cmd->add_flag("--dot", chi_dot, "emit a colored DOT rendering (chi goes to stderr)");
    chi_cmd->add_option("-o,--output", chi_out, "write to file instead of stdout");

    // mkset
    auto* mkset_cmd = app.add_subcommand("mkset", "list the target chromatic set for k");
    int mkset_k = 1;
    mkset_cmd->add_option("k", mkset_k, "pair count")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    std::string verify_campaign, verify_out, verify_mode = "compositional";
    VerifyOptions vopts;
    int verify_k = 1;
    verify->add_option("campaign", verify_campaign, "sigma | rho | parity | prop1 | join")
        ->required()
        ->check(CLI::IsMember({"sigma", "rho", "parity", "prop1", "join"}));
    verify->add_option("-k", verify_k, "pair count (parity campaign)")->capture_default_str();
    verify->add_option("--mode", verify_mode, "parity mode: compositional | monolithic")
        ->check(CLI::IsMember({"compositional", "monolithic"}))
        ->capture_default_str();
    verify->add_option("--seed", vopts.seed, "corpus seed")->capture_default_str();
    verify->add_option("--cases", vopts.cases, "random cases to draw")->capture_default_str();
    verify->add_option("-o,--output", verify_out, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (reduce->parsed()) {
            const CnfFormula phi = parse_dimacs_cnf(slurp(reduce_input));
            const Graph g =
                reduce_kind == "sigma" ? sigma(phi) : rho_oracle(phi, var_cap);
            emit(reduce_dot ? write_dot(g) : write_dimacs_graph(g), reduce_out);
            return 0;
        }

        if (combine->parsed()) {
            std::vector<CnfFormula> formulas;
            formulas.reserve(combine_inputs.size());
            for (const std::string& path : combine_inputs)
                formulas.push_back(parse_dimacs_cnf(slurp(path)));
            if (static_cast<int>(formulas.size()) != 2 * combine_k) {
                std::cerr << "error: expected " << 2 * combine_k << " formulas for k="
                          << combine_k << ", got " << formulas.size() << '\n';
                return 2;
            }
            const MonotoneChain chain = make_monotone_chain(std::move(formulas), var_cap);
            const CompositeGraph combined = wagner_combine(chain);
            emit(combine_composite ? combined.describe()
                                   : write_dimacs_graph(combined.flatten()),
                 combine_out);
            return 0;
        }

        if (chi_cmd->parsed()) {
            const Graph g = read_dimacs_graph(slurp(chi_input));
            const ChiResult result = chromatic_number(g, solver);
            if (chi_dot) {
                std::cerr << "chi " << result.chi << '\n';
                emit(write_dot(g, &result.witness), chi_out);
            } else {
                emit("chi " + std::to_string(result.chi) + '\n' +
                         coloring_line(result.witness),
                     chi_out);
            }
            return 0;
        }

        if (mkset_cmd->parsed()) {
            const MkSet m = mk_set(mkset_k);
            std::ostringstream out;
            for (size_t i = 0; i < m.members.size(); ++i)
                out << (i ? " " : "") << m.members[i];
            out << '\n';
            std::cout << out.str();
            return 0;
        }

        if (verify->parsed()) {
            vopts.variable_cap = var_cap;
            vopts.solver = solver;
            CampaignReport report;
            if (verify_campaign == "sigma") {
                report = sigma_campaign(vopts);
            } else if (verify_campaign == "rho") {
                report = rho_campaign(vopts);
            } else if (verify_campaign == "parity") {
                const ParityMode mode = verify_mode == "monolithic" ? ParityMode::monolithic
                                                                    : ParityMode::compositional;
                report = parity_campaign(verify_k, mode, vopts);
            } else if (verify_campaign == "prop1") {
                report = prop1_campaign(vopts);
            } else {
                report = join_algebra_campaign(vopts);
            }
            emit(render_report(report), verify_out);
            return report.passed() ? 0 : 1;
        }
    } catch (const LimitError& e) {
        std::cerr << "limit: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
