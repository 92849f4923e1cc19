#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace exactcolor {

/// Variable cap for brute-force satisfiability; 2^24 assignments is the
/// largest sweep this library will attempt.
inline constexpr int kDefaultVariableCap = 24;

struct Literal {
    int variable = 0; // 0-based
    bool positive = true;

    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

/// CNF instance with clause width 1..3. Shorter-than-3 clauses are legal and
/// are widened by the reductions (repeating a literal does not change the
/// clause's truth function).
struct CnfFormula {
    int variable_count = 0;
    std::vector<Clause> clauses;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Throws std::invalid_argument on out-of-range variables, empty clauses or
/// clauses wider than 3.
void validate(const CnfFormula& f);

bool evaluate(const CnfFormula& f, const std::vector<bool>& assignment);

/// Lexicographically first satisfying assignment (all-false first, variable 0
/// most significant), or nullopt if unsatisfiable. Formulas with more than
/// `variable_cap` variables throw LimitError.
std::optional<std::vector<bool>> brute_force_sat(const CnfFormula& f,
                                                 int variable_cap = kDefaultVariableCap);

/// DIMACS CNF: "c" comments, one "p cnf <n> <m>" header, then m clauses as
/// 0-terminated signed 1-based literal runs (clauses may span lines).
/// Malformed input throws ParseError with the offending line number.
CnfFormula parse_dimacs_cnf(std::string_view text);

/// Canonical DIMACS CNF output: header, one clause per line, literals in
/// stored order, " 0" terminator, LF line endings.
std::string write_dimacs_cnf(const CnfFormula& f);

/// (x1 v x2 v x3): three variables, one clause, satisfiable.
CnfFormula canonical_satisfiable();

/// All eight sign patterns over three variables: every assignment falsifies
/// exactly one clause, so the formula is unsatisfiable.
CnfFormula canonical_unsatisfiable();

/// Formula sequence phi_1 >= phi_2 >= ... in the satisfiability order:
/// whenever phi_{j+1} is satisfiable, phi_j is too. Length is exactly 2k.
struct MonotoneChain {
    int k = 0;
    std::vector<CnfFormula> formulas;
};

/// Index j (0-based) of the first formula that witnesses a monotonicity
/// violation (formulas[j] unsatisfiable while formulas[j+1] is satisfiable),
/// or nullopt if the sequence is monotone.
std::optional<std::size_t> monotone_violation(std::span<const CnfFormula> formulas,
                                              int variable_cap = kDefaultVariableCap);

/// True iff satisfiable formulas form a prefix. Empty or odd-length
/// sequences throw std::invalid_argument.
bool is_monotone_chain(std::span<const CnfFormula> formulas,
                       int variable_cap = kDefaultVariableCap);

/// Validates length and monotonicity (via brute-force satisfiability) and
/// wraps the sequence; violations throw std::invalid_argument naming the
/// offending position.
MonotoneChain make_monotone_chain(std::vector<CnfFormula> formulas,
                                  int variable_cap = kDefaultVariableCap);

/// Chain of length 2k whose first t formulas are canonical_satisfiable() and
/// the rest canonical_unsatisfiable(); requires 0 <= t <= 2k.
MonotoneChain canonical_chain(int k, int t);

} // namespace exactcolor
