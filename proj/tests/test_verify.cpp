#include <random>

#include "doctest.h"
#include "hfree/error.hpp"
#include "hfree/formats.hpp"
#include "hfree/verify.hpp"
#include "support/oracles.hpp"

using namespace hfree;

namespace {

CnfFormula one_clause() {
  CnfFormula f;
  f.variable_count = 3;
  f.clauses = {{{0, true}, {1, false}, {2, true}}};
  return f;
}

// All eight sign patterns over three variables.
CnfFormula all_signs() {
  CnfFormula f;
  f.variable_count = 3;
  for (int m = 0; m < 8; ++m)
    f.clauses.push_back({{0, (m & 1) != 0}, {1, (m & 2) != 0}, {2, (m & 4) != 0}});
  return f;
}

Constraint f1(std::size_t a, std::size_t b, std::size_t c) { return {ConstraintKind::f1, 0, {a, b, c}}; }
Constraint f2(std::size_t a) { return {ConstraintKind::f2, 0, {a}}; }

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("machine line") {
  VerificationReport r{"gap:c4-del", "0123456789abcdef", Verdict::pass, "k=3", ""};
  CHECK(r.machine_line() == "RESULT pass gap:c4-del digest=0123456789abcdef k=3");
  r.verdict = Verdict::fail;
  r.witness = "w";
  CHECK(r.machine_line().rfind("RESULT fail ", 0) == 0);
  CHECK(r.prose().find("witness: w") != std::string::npos);
  CHECK(to_string(Verdict::skipped) == "skipped");
}

TEST_CASE("equivalence reports") {
  auto yes = verify_sat_equivalence(one_clause(), "general-del", named_pattern("wheel4"));
  CHECK(yes.verdict == Verdict::pass);
  CHECK(yes.details.find("sat=yes sandwich=yes") != std::string::npos);
  auto no = verify_sat_equivalence(all_signs(), "c4-del", std::nullopt);
  CHECK(no.verdict == Verdict::pass);
  CHECK(no.details.find("sat=no sandwich=no") != std::string::npos);
  for (const char* t : {"c5-del", "c4-comp", "house-comp-via-c4"})
    CHECK(verify_sat_equivalence(one_clause(), t, std::nullopt).verdict == Verdict::pass);
  CHECK(verify_sat_equivalence(one_clause(), "general-comp", named_pattern("wheel4")).verdict ==
        Verdict::pass);

  CnfFormula big;
  big.variable_count = kSatGuard + 5;
  big.clauses = {{{0, true}, {1, true}, {2, true}}};
  auto skip = verify_sat_equivalence(big, "c4-del", std::nullopt);
  CHECK(skip.verdict == Verdict::skipped);
  CHECK(skip.machine_line().rfind("RESULT skipped equivalence:c4-del", 0) == 0);

  auto limited = verify_sat_equivalence(all_signs(), "general-del", named_pattern("wheel4"),
                                        VerifyOptions{SearchOptions{5}});
  CHECK(limited.verdict == Verdict::skipped);
  CHECK_THROWS_AS(verify_sat_equivalence(one_clause(), "general-del", std::nullopt), PreconditionError);
  CHECK_THROWS_AS(verify_sat_equivalence(one_clause(), "c7-del", std::nullopt), PreconditionError);
}

TEST_CASE("gap reports") {
  SandwichInstance yes;
  yes.graph = named_pattern("C4").graph;
  yes.free_elements = {{0, 1}};
  auto p = Polynomial::parse("1,1,1");
  auto r = verify_gap(yes, "c4-del", p);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.details.find("source=yes") != std::string::npos);
  CHECK(verify_gap(yes, "house-del", p).verdict == Verdict::pass);

  SandwichInstance no;
  no.graph = named_pattern("C4").graph;
  auto rn = verify_gap(no, "c4-del", p);
  CHECK(rn.verdict == Verdict::pass);
  CHECK(rn.details.find("source=no") != std::string::npos);
  CHECK(rn.details.find("lifted=none") != std::string::npos);

  SandwichInstance comp;
  comp.mode = Mode::completion;
  comp.graph = named_pattern("P4").graph;
  comp.free_elements = {{0, 2}};
  CHECK(verify_gap(comp, "c4-comp", p).verdict == Verdict::pass);
  CHECK(verify_gap(comp, "house-comp", p).verdict == Verdict::pass);

  auto limited = verify_gap(yes, "c4-del", p, std::nullopt, VerifyOptions{SearchOptions{1}});
  CHECK(limited.verdict != Verdict::fail);
}

TEST_CASE("duality reports") {
  std::mt19937_64 rng(8);
  Graph g = oracle::random_graph(rng, 6, 0.5);
  auto r = verify_duality(g, named_pattern("house"), 2);
  CHECK(r.verdict == Verdict::pass);
  auto zero = verify_duality(g, named_pattern("P5"), 0);
  CHECK(zero.verdict == Verdict::pass);
  bool free_now = is_h_free(g, named_pattern("P5").graph);
  CHECK(zero.details.find(free_now ? "deletion=yes" : "deletion=no") != std::string::npos);
  CHECK(verify_duality(Graph(8), named_pattern("C5"), 1).verdict == Verdict::skipped);
  CHECK(verify_duality(g, named_pattern("C5"), 4).verdict == Verdict::skipped);
}

TEST_CASE("scaling reports") {
  auto both = verify_opt_scaling({3, {f1(0, 1, 2), f2(0)}}, 5, 5);
  CHECK(both.verdict == Verdict::pass);
  CHECK(both.details == "delta=5 minones=2 graph=10");
  auto none = verify_opt_scaling({2, {}}, 5, 8);
  CHECK(none.verdict == Verdict::pass);
  CHECK(none.details == "delta=8 minones=0 graph=0");
  auto single = verify_opt_scaling({1, {f2(0)}}, 5);
  CHECK(single.verdict == Verdict::pass);
  CHECK(single.details == "delta=11 minones=1 graph=11");
  CHECK(verify_opt_scaling({kSatGuard + 1, {}}, 5).verdict == Verdict::skipped);
}

TEST_CASE("gadget reports") {
  auto reports = verify_gadgets();
  CHECK(reports.size() == 6);
  for (const auto& r : reports) {
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.check.find(' ') == std::string::npos);
  }
}

TEST_CASE("digests are stable") {
  auto a = verify_sat_equivalence(one_clause(), "c4-del", std::nullopt);
  auto b = verify_sat_equivalence(one_clause(), "c4-del", std::nullopt);
  CHECK(a.machine_line() == b.machine_line());
  CHECK(a.digest.size() == 16);
}

}
