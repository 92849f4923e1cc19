#include "exactcolor/cnf.hpp"

#include "exactcolor/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace exactcolor {

void validate(const CnfFormula& f) {
    if (f.variable_count < 0)
        throw std::invalid_argument("negative variable count");
    for (const Clause& clause : f.clauses) {
        if (clause.empty() || clause.size() > 3)
            throw std::invalid_argument("clause width must be 1..3");
        for (const Literal& lit : clause)
            if (lit.variable < 0 || lit.variable >= f.variable_count)
                throw std::invalid_argument("literal variable out of range");
    }
}

bool evaluate(const CnfFormula& f, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != f.variable_count)
        throw std::invalid_argument("assignment length does not match variable count");
    for (const Clause& clause : f.clauses) {
        bool sat = false;
        for (const Literal& lit : clause) {
            if (assignment[lit.variable] == lit.positive) {
                sat = true;
                break;
            }
        }
        if (!sat)
            return false;
    }
    return true;
}

std::optional<std::vector<bool>> brute_force_sat(const CnfFormula& f, int variable_cap) {
    validate(f);
    if (variable_cap < 0 || variable_cap > 62)
        throw std::invalid_argument("variable cap out of range");
    const int n = f.variable_count;
    if (n > variable_cap)
        throw LimitError("formula has " + std::to_string(n) +
                         " variables, brute-force cap is " + std::to_string(variable_cap));

    // Bit i of a mask holds variable i's value with variable 0 most
    // significant, so counting masks upward enumerates assignments in
    // lexicographic order (all-false first).
    const auto bit_of = [n](int variable) {
        return std::uint64_t{1} << (n - 1 - variable);
    };
    std::vector<std::uint64_t> pos(f.clauses.size(), 0), neg(f.clauses.size(), 0);
    for (size_t i = 0; i < f.clauses.size(); ++i)
        for (const Literal& lit : f.clauses[i])
            (lit.positive ? pos[i] : neg[i]) |= bit_of(lit.variable);

    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        bool sat = true;
        for (size_t i = 0; i < f.clauses.size(); ++i) {
            if ((mask & pos[i]) == 0 && (~mask & neg[i]) == 0) {
                sat = false;
                break;
            }
        }
        if (sat) {
            std::vector<bool> assignment(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v)
                assignment[v] = (mask & bit_of(v)) != 0;
            return assignment;
        }
    }
    return std::nullopt;
}

CnfFormula parse_dimacs_cnf(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    CnfFormula f;
    Clause current;

    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        if (raw.find_first_not_of(" \t") == std::string::npos)
            continue;
        std::istringstream fields(raw);
        if (raw[raw.find_first_not_of(" \t")] == 'c')
            continue;
        std::string head;
        fields >> head;
        if (head == "p") {
            if (have_header)
                throw ParseError("duplicate p line", line_no);
            std::string format;
            if (!(fields >> format) || format != "cnf")
                throw ParseError("expected 'p cnf <n> <m>'", line_no);
            if (!(fields >> n >> m) || n < 0 || m < 0)
                throw ParseError("expected 'p cnf <n> <m>'", line_no);
            std::string trailing;
            if (fields >> trailing)
                throw ParseError("trailing tokens after header", line_no);
            have_header = true;
            f.variable_count = static_cast<int>(n);
            continue;
        }
        if (!have_header)
            throw ParseError("clause before 'p cnf' header", line_no);
        fields = std::istringstream(raw);
        long long lit = 0;
        while (fields >> lit) {
            if (lit == 0) {
                if (current.empty())
                    throw ParseError("empty clause", line_no);
                if (current.size() > 3)
                    throw ParseError("clause wider than 3 literals", line_no);
                f.clauses.push_back(current);
                current.clear();
                continue;
            }
            const long long var = lit > 0 ? lit : -lit;
            if (var > n)
                throw ParseError("literal out of range", line_no);
            current.push_back({static_cast<int>(var - 1), lit > 0});
        }
        if (!fields.eof())
            throw ParseError("expected integer literal", line_no);
    }
    if (!have_header)
        throw ParseError("missing 'p cnf' header");
    if (!current.empty())
        throw ParseError("unterminated clause at end of input");
    if (static_cast<long long>(f.clauses.size()) != m)
        throw ParseError("header declares " + std::to_string(m) + " clauses, found " +
                         std::to_string(f.clauses.size()));
    return f;
}

std::string write_dimacs_cnf(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
    for (const Clause& clause : f.clauses) {
        for (const Literal& lit : clause)
            out << (lit.positive ? lit.variable + 1 : -(lit.variable + 1)) << ' ';
        out << "0\n";
    }
    return out.str();
}

CnfFormula canonical_satisfiable() {
    return {3, {{{0, true}, {1, true}, {2, true}}}};
}

CnfFormula canonical_unsatisfiable() {
    CnfFormula f{3, {}};
    for (int pattern = 0; pattern < 8; ++pattern) {
        Clause clause;
        for (int v = 0; v < 3; ++v)
            clause.push_back({v, ((pattern >> v) & 1) == 0});
        f.clauses.push_back(clause);
    }
    return f;
}

std::optional<std::size_t> monotone_violation(std::span<const CnfFormula> formulas,
                                              int variable_cap) {
    std::vector<bool> sat(formulas.size());
    for (size_t j = 0; j < formulas.size(); ++j)
        sat[j] = brute_force_sat(formulas[j], variable_cap).has_value();
    for (size_t j = 0; j + 1 < formulas.size(); ++j)
        if (!sat[j] && sat[j + 1])
            return j;
    return std::nullopt;
}

bool is_monotone_chain(std::span<const CnfFormula> formulas, int variable_cap) {
    if (formulas.empty() || formulas.size() % 2 != 0)
        throw std::invalid_argument("chain length must be even and positive");
    return !monotone_violation(formulas, variable_cap).has_value();
}

MonotoneChain make_monotone_chain(std::vector<CnfFormula> formulas, int variable_cap) {
    if (formulas.empty() || formulas.size() % 2 != 0)
        throw std::invalid_argument("chain length must be even and positive");
    if (auto j = monotone_violation(formulas, variable_cap))
        throw std::invalid_argument("not monotone: formula " + std::to_string(*j + 1) +
                                    " is unsatisfiable but formula " + std::to_string(*j + 2) +
                                    " is satisfiable");
    MonotoneChain chain;
    chain.k = static_cast<int>(formulas.size() / 2);
    chain.formulas = std::move(formulas);
    return chain;
}

MonotoneChain canonical_chain(int k, int t) {
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
    if (t < 0 || t > 2 * k)
        throw std::invalid_argument("t must be in [0, 2k]");
    MonotoneChain chain;
    chain.k = k;
    for (int j = 0; j < 2 * k; ++j)
        chain.formulas.push_back(j < t ? canonical_satisfiable() : canonical_unsatisfiable());
    return chain;
}

} // namespace exactcolor
