#include "exactcolor/cnf.hpp"
#include "exactcolor/errors.hpp"
#include "exactcolor/verify.hpp"

#include "doctest.h"
#include "support/oracles.hpp"

#include <random>

using namespace exactcolor;

TEST_CASE("validate rejects malformed formulas") {
    CHECK_NOTHROW(validate(CnfFormula{2, {{{0, true}}, {{0, false}, {1, true}}}}));
    CHECK_THROWS_AS(validate(CnfFormula{-1, {}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(CnfFormula{1, {{}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(CnfFormula{1, {{{1, true}}}}), std::invalid_argument);
    CHECK_THROWS_AS(
        validate(CnfFormula{1, {{{0, true}, {0, true}, {0, true}, {0, true}}}}),
        std::invalid_argument);
}

TEST_CASE("evaluate") {
    const CnfFormula f{2, {{{0, true}, {1, false}}}};
    CHECK(evaluate(f, {true, true}));
    CHECK(evaluate(f, {false, false}));
    CHECK_FALSE(evaluate(f, {false, true}));
    CHECK_THROWS_AS(evaluate(f, {true}), std::invalid_argument);
}

TEST_CASE("brute_force_sat finds the lexicographically first model") {
    const auto model = brute_force_sat(canonical_satisfiable());
    REQUIRE(model.has_value());
    CHECK(*model == std::vector<bool>{false, false, true});

    CHECK_FALSE(brute_force_sat(canonical_unsatisfiable()).has_value());

    // all-false is checked first
    const CnfFormula negs{2, {{{0, false}}, {{1, false}}}};
    CHECK(*brute_force_sat(negs) == std::vector<bool>{false, false});

    const CnfFormula empty{0, {}};
    CHECK(brute_force_sat(empty).has_value());
}

TEST_CASE("brute_force_sat enforces the variable cap") {
    CnfFormula wide{30, {{{29, true}}}};
    CHECK_THROWS_AS(brute_force_sat(wide), LimitError);
    CHECK_NOTHROW(brute_force_sat(wide, 30));
    CHECK_THROWS_AS(brute_force_sat(wide, 63), std::invalid_argument);
}

TEST_CASE("brute_force_sat agrees with the odometer oracle") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const CnfFormula f = random_formula(rng, 8, 6);
        CHECK(brute_force_sat(f) == oracle::first_model(f));
    }
}

TEST_CASE("canonical formulas") {
    const CnfFormula sat = canonical_satisfiable();
    CHECK(sat.variable_count == 3);
    CHECK(sat.clauses.size() == 1);
    CHECK(evaluate(sat, {true, false, false}));

    const CnfFormula unsat = canonical_unsatisfiable();
    CHECK(unsat.variable_count == 3);
    CHECK(unsat.clauses.size() == 8);
    for (int bits = 0; bits < 8; ++bits)
        CHECK_FALSE(evaluate(unsat, {(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0}));
}

TEST_CASE("dimacs cnf parse and write") {
    const std::string text = "p cnf 3 2\n1 -2 3 0\n-1 2 0\n";
    const CnfFormula f = parse_dimacs_cnf(text);
    CHECK(f.variable_count == 3);
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0] == Clause{{0, true}, {1, false}, {2, true}});
    CHECK(f.clauses[1] == Clause{{0, false}, {1, true}});
    CHECK(write_dimacs_cnf(f) == text);

    // clauses may span lines; comments and blanks are skipped
    const CnfFormula g = parse_dimacs_cnf("c hi\np cnf 2 2\n1\n2 0 -1\n\n-2 0\n");
    CHECK(g.clauses.size() == 2);
    CHECK(g.clauses[0] == Clause{{0, true}, {1, true}});

    CHECK(write_dimacs_cnf(CnfFormula{0, {}}) == "p cnf 0 0\n");
}

TEST_CASE("dimacs cnf reader rejects malformed input") {
    CHECK_THROWS_WITH_AS(parse_dimacs_cnf("1 2 0\n"), "line 1: clause before 'p cnf' header",
                         ParseError);
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\np cnf 2 1\n1 0\n"), ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs_cnf("p cnf 2 1\n3 0\n"), "line 2: literal out of range",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs_cnf("p cnf 2 1\n0\n"), "line 2: empty clause", ParseError);
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 1 1 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 two 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 2\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_cnf("p sat 2 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_cnf(""), ParseError);
}

TEST_CASE("cnf write-parse round trip on random formulas") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const CnfFormula f = random_formula(rng, 10, 8);
        const std::string text = write_dimacs_cnf(f);
        CHECK(parse_dimacs_cnf(text) == f);
        CHECK(write_dimacs_cnf(parse_dimacs_cnf(text)) == text);
    }
}

TEST_CASE("monotone chain checks") {
    const CnfFormula s = canonical_satisfiable();
    const CnfFormula u = canonical_unsatisfiable();

    CHECK(is_monotone_chain(std::vector<CnfFormula>{s, u}));
    CHECK(is_monotone_chain(std::vector<CnfFormula>{s, s}));
    CHECK(is_monotone_chain(std::vector<CnfFormula>{u, u}));
    CHECK_FALSE(is_monotone_chain(std::vector<CnfFormula>{u, s}));
    CHECK(monotone_violation(std::vector<CnfFormula>{u, s}) == std::size_t{0});
    CHECK(monotone_violation(std::vector<CnfFormula>{s, u, s, u}) == std::size_t{1});
    CHECK_FALSE(monotone_violation(std::vector<CnfFormula>{s, s, u, u}).has_value());

    CHECK_THROWS_AS(is_monotone_chain(std::vector<CnfFormula>{}), std::invalid_argument);
    CHECK_THROWS_AS(is_monotone_chain(std::vector<CnfFormula>{s}), std::invalid_argument);

    const MonotoneChain chain = make_monotone_chain({s, s, u, u});
    CHECK(chain.k == 2);
    CHECK(chain.formulas.size() == 4);
    CHECK_THROWS_WITH_AS(make_monotone_chain({u, s}),
                         "not monotone: formula 1 is unsatisfiable but formula 2 is satisfiable",
                         std::invalid_argument);
    CHECK_THROWS_AS(make_monotone_chain({s}), std::invalid_argument);
}

TEST_CASE("canonical_chain") {
    for (int k = 1; k <= 3; ++k) {
        for (int t = 0; t <= 2 * k; ++t) {
            const MonotoneChain chain = canonical_chain(k, t);
            CHECK(chain.k == k);
            REQUIRE(static_cast<int>(chain.formulas.size()) == 2 * k);
            for (int j = 0; j < 2 * k; ++j)
                CHECK(brute_force_sat(chain.formulas[j]).has_value() == (j < t));
            CHECK(is_monotone_chain(chain.formulas));
        }
    }
    CHECK_THROWS_AS(canonical_chain(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(canonical_chain(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(canonical_chain(1, -1), std::invalid_argument);
}
