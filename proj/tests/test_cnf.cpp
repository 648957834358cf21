#include <random>

#include "doctest.h"
#include "hfree/cnf.hpp"
#include "hfree/error.hpp"
#include "support/oracles.hpp"

using namespace hfree;

TEST_SUITE("cnf") {

TEST_CASE("parse examples") {
  auto f = parse_dimacs("p cnf 2 1\n1 -2 0\n");
  CHECK(f.variable_count == 2);
  REQUIRE(f.clauses.size() == 1);
  CHECK(f.clauses[0] == Clause{{0, true}, {1, false}});
  auto g = parse_dimacs("c comment\np cnf 1 2\n1 0\n-1 0\n");
  CHECK_FALSE(sat_brute_force(g));
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 3\n1 2 0\n-1 3 0\n"), ParseError);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_dimacs("p cnf x 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p dnf 1 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 a 0\n"), ParseError);
  // clauses may span lines
  auto f = parse_dimacs("p cnf 3 1\n1 2\n3 0\n");
  CHECK(f.clauses[0].size() == 3);
}

TEST_CASE("render round trip") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto f = oracle::random_3cnf(rng, 3 + rng() % 4, rng() % 6);
    CHECK(parse_dimacs(render_dimacs(f)) == f);
  }
  CnfFormula empty;
  CHECK(parse_dimacs(render_dimacs(empty)) == empty);
}

TEST_CASE("normalization examples") {
  CnfFormula two{2, {{{0, true}, {1, true}}}};
  auto n = normalize_3cnf(two);
  CHECK(n.variable_count == 3);
  REQUIRE(n.clauses.size() == 2);
  CHECK(n.clauses[0] == Clause{{0, true}, {1, true}, {2, true}});
  CHECK(n.clauses[1] == Clause{{0, true}, {1, true}, {2, false}});
  CnfFormula taut{2, {{{0, true}, {0, false}, {1, true}}}};
  CHECK(normalize_3cnf(taut).clauses.empty());
  CnfFormula dup{3, {{{0, true}, {0, true}, {1, true}, {2, false}}}};
  CHECK(normalize_3cnf(dup).clauses == std::vector<Clause>{{{0, true}, {1, true}, {2, false}}});
  CnfFormula wide{4, {{{0, true}, {1, true}, {2, true}, {3, true}}}};
  CHECK_THROWS_AS(normalize_3cnf(wide), PreconditionError);
  std::mt19937_64 rng(4);
  auto exact = oracle::random_3cnf(rng, 4, 5);
  CHECK(normalize_3cnf(exact) == exact);
}

TEST_CASE("normalization preserves satisfiability and is idempotent") {
  std::mt19937_64 rng(9);
  int unsat = 0;
  for (int i = 0; i < 400; ++i) {
    CnfFormula f;
    f.variable_count = 1 + rng() % 4;
    std::size_t m = rng() % 7;
    for (std::size_t c = 0; c < m; ++c) {
      Clause cl;
      std::size_t len = 1 + rng() % 3;
      for (std::size_t j = 0; j < len; ++j)
        cl.push_back({static_cast<std::uint32_t>(rng() % f.variable_count),
                      static_cast<bool>(rng() & 1)});
      f.clauses.push_back(cl);
    }
    auto n = normalize_3cnf(f);
    CHECK(is_exact_3cnf(n));
    CHECK(oracle::satisfiable(n) == oracle::satisfiable(f));
    CHECK(normalize_3cnf(n) == n);
    unsat += !oracle::satisfiable(f);
    // satisfying assignments of f extend to the normalized formula
    auto a = sat_brute_force(f);
    if (a) {
      bool extends = false;
      std::size_t extra = n.variable_count - f.variable_count;
      for (std::size_t bits = 0; bits < (std::size_t{1} << extra) && !extends; ++bits) {
        Assignment b = *a;
        for (std::size_t j = 0; j < extra; ++j) b.push_back((bits >> j) & 1);
        extends = satisfies(n, b);
      }
      CHECK(extends);
    }
  }
  CHECK(unsat > 10);
}

TEST_CASE("empty clause normalizes to an unsatisfiable block") {
  CnfFormula f{1, {Clause{}}};
  auto n = normalize_3cnf(f);
  CHECK(n.clauses.size() == 8);
  CHECK_FALSE(sat_brute_force(n));
}

TEST_CASE("duplication for occurrences") {
  CnfFormula one{3, {{{0, true}, {1, false}, {2, true}}}};
  auto d = duplicate_for_min_occurrences(one, 2);
  CHECK(d.clauses.size() == 2);
  CHECK(d.clauses[0] == d.clauses[1]);
  CnfFormula twice = d;
  CHECK(duplicate_for_min_occurrences(twice, 2) == twice);
  CHECK(duplicate_for_min_occurrences(CnfFormula{}, 2) == CnfFormula{});
  CnfFormula unused{5, {{{0, true}, {1, false}, {2, true}}}};
  auto occ = occurrence_counts(duplicate_for_min_occurrences(unused, 3));
  CHECK(occ == std::vector<std::size_t>{3, 3, 3, 0, 0});
}

TEST_CASE("brute force") {
  CnfFormula f{3, {{{0, true}, {1, true}, {2, true}}}};
  auto a = sat_brute_force(f);
  REQUIRE(a);
  CHECK(satisfies(f, *a));
  CnfFormula all;
  all.variable_count = 3;
  for (int s = 0; s < 8; ++s)
    all.clauses.push_back({{0, bool(s & 1)}, {1, bool(s & 2)}, {2, bool(s & 4)}});
  CHECK_FALSE(sat_brute_force(all));
  CnfFormula none{4, {}};
  auto z = sat_brute_force(none);
  REQUIRE(z);
  CHECK(*z == Assignment(4, false));
  CHECK_THROWS_AS(sat_brute_force(CnfFormula{25, {}}), GuardExceeded);
}

}
