#include <random>

#include "doctest.h"
#include "hfree/error.hpp"
#include "hfree/reduce_general.hpp"
#include "support/oracles.hpp"

using namespace hfree;

namespace {

CnfFormula one_clause() {
  CnfFormula f;
  f.variable_count = 3;
  f.clauses = {{{0, true}, {1, false}, {2, true}}};
  return f;
}

// (x1) (~x1 v x2) (~x2), padded to exact 3CNF.
CnfFormula unsat_chain() {
  CnfFormula f;
  f.variable_count = 2;
  f.clauses = {{{0, true}}, {{0, false}, {1, true}}, {{1, false}}};
  return normalize_3cnf(f);
}

std::size_t free_count_identity(const CnfFormula& f, const Pattern& h) {
  std::size_t n = f.variable_count, m = f.clauses.size();
  return 2 * n + 3 * m + 3 * m * (h.p + 1);
}

bool contains(const ModificationSet& f, VertexPair e) {
  return std::binary_search(f.begin(), f.end(), e);
}

// Standalone gadget carved out of a reduction by its recorded extent.
SandwichInstance carve(const Reduction& r, const std::string& id) {
  const auto& vs = r.trace.gadget_extents.at(id);
  SandwichInstance out;
  out.mode = r.instance.mode;
  out.graph = r.instance.graph.induced(vs);
  for (const auto& e : r.instance.free_elements) {
    auto a = std::find(vs.begin(), vs.end(), e.u);
    auto b = std::find(vs.begin(), vs.end(), e.v);
    if (a != vs.end() && b != vs.end())
      out.free_elements.insert({static_cast<Vertex>(a - vs.begin()), static_cast<Vertex>(b - vs.begin())});
  }
  return out;
}

VertexPair local_of(const Reduction& r, const std::string& id, VertexPair e) {
  const auto& vs = r.trace.gadget_extents.at(id);
  auto a = std::find(vs.begin(), vs.end(), e.u) - vs.begin();
  auto b = std::find(vs.begin(), vs.end(), e.v) - vs.begin();
  return {static_cast<Vertex>(a), static_cast<Vertex>(b)};
}

std::vector<std::vector<VertexPair>> minimal(std::vector<std::vector<VertexPair>> sols) {
  std::vector<std::vector<VertexPair>> out;
  for (const auto& s : sols) {
    bool min = true;
    for (const auto& t : sols)
      if (t.size() < s.size() && std::includes(s.begin(), s.end(), t.begin(), t.end())) min = false;
    if (min) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("reduce-general") {

TEST_CASE("polynomial") {
  Polynomial p = Polynomial::parse("1,1,1");
  CHECK(p(5) == 6);
  CHECK(Polynomial::parse("2,2,0")(3) == 18);
  CHECK(Polynomial::parse("3,1,4").to_string() == "3,1,4");
  CHECK_THROWS_AS(Polynomial::parse("0,1,1"), PreconditionError);
  CHECK_THROWS_AS(Polynomial::parse("1,0,1"), PreconditionError);
  CHECK_THROWS_AS(Polynomial::parse("1,1"), PreconditionError);
  CHECK_THROWS_AS(Polynomial::parse("1,x,1"), PreconditionError);
  CHECK_THROWS_AS((Polynomial{1, 64, 0}(2)), PreconditionError);
  for (std::uint64_t l = 1; l < 20; ++l) CHECK(p(l) >= l);
}

TEST_CASE("deletion reduction on one clause with wheel4") {
  auto h = named_pattern("wheel4");
  REQUIRE(h.p == 5);
  auto r = reduce_3sat_to_sandwich_del(one_clause(), h);
  CHECK(r.instance.free_elements.size() == 27);
  CHECK(r.trace.variable_literals.size() == 6);
  CHECK(r.trace.clause_literals.size() == 3);
  CHECK(r.trace.chains.size() == 3);
  for (const auto& [key, chain] : r.trace.chains) CHECK(chain.size() == h.p + 3);
  std::size_t gadgets = 0, chains = 0;
  for (const auto& [id, vs] : r.trace.gadget_extents) (id.rfind("chain", 0) == 0 ? chains : gadgets)++;
  CHECK(gadgets == 4);
  CHECK(chains == 3);
  for (const auto& [name, e] : r.instance.labels) CHECK(r.instance.free_elements.count(e) == 1);
  CHECK(r.instance.labels.count("x1"));
  CHECK(r.instance.labels.count("~x3"));
  CHECK(r.instance.labels.count("c1.l2.k6"));
  CHECK_FALSE(r.instance.labels.count("c1.l2.k7"));
  CHECK(solve_sandwich(r.instance, h).has_value());
}

TEST_CASE("variable gadget is H plus two deletable edges") {
  auto h = named_pattern("wheel4");
  auto r = reduce_3sat_to_sandwich_del(one_clause(), h);
  auto g = carve(r, "var1");
  CHECK(g.graph.edge_count() == h.graph.edge_count() + 2);
  CHECK(g.free_elements.size() == 2);
  auto sols = oracle::solutions(g, h.graph);
  // deleting both brings back H; deleting nothing leaves no induced H on 5 vertices
  CHECK(sols.size() == 3);
}

TEST_CASE("deletable count identity") {
  std::mt19937_64 rng(11);
  for (const char* name : {"wheel4", "wheel5", "octahedron"}) {
    auto h = named_pattern(name);
    for (int t = 0; t < 10; ++t) {
      auto f = oracle::random_3cnf(rng, 3 + rng() % 4, rng() % 5);
      auto r = reduce_3sat_to_sandwich_del(f, h);
      CHECK(r.instance.free_elements.size() == free_count_identity(f, h));
      auto c = reduce_3sat_to_sandwich_comp(f, h);
      CHECK(c.instance.free_elements.size() == 2 * f.variable_count + 4 * f.clauses.size() +
                                                   3 * f.clauses.size() * (h.p + 1));
    }
  }
}

TEST_CASE("pattern and formula preconditions") {
  CHECK_THROWS_AS(reduce_3sat_to_sandwich_del(one_clause(), named_pattern("K5-e")), RequirementError);
  CHECK_THROWS_AS(reduce_3sat_to_sandwich_comp(one_clause(), named_pattern("K5-e")), RequirementError);
  CHECK_THROWS_AS(reduce_3sat_to_sandwich_del(one_clause(), named_pattern("C5")), RequirementError);
  CnfFormula short_clause;
  short_clause.variable_count = 2;
  short_clause.clauses = {{{0, true}, {1, true}}};
  CHECK_THROWS_AS(reduce_3sat_to_sandwich_del(short_clause, named_pattern("wheel4")), PreconditionError);
}

TEST_CASE("empty formula gives an empty YES instance") {
  auto h = named_pattern("wheel4");
  for (auto r : {reduce_3sat_to_sandwich_del({}, h), reduce_3sat_to_sandwich_comp({}, h)}) {
    CHECK(r.instance.graph.vertex_count() == 0);
    CHECK(r.instance.free_elements.empty());
    CHECK(solve_sandwich(r.instance, h).has_value());
  }
}

TEST_CASE("completion clause gadget minimal solutions") {
  for (const char* name : {"wheel4", "octahedron"}) {
    auto h = named_pattern(name);
    auto r = reduce_3sat_to_sandwich_comp(one_clause(), h);
    auto g = carve(r, "clause1");
    REQUIRE(g.free_elements.size() == 4);
    CHECK(g.graph.vertex_count() == 2 * h.graph.vertex_count() - 2);
    auto l1 = local_of(r, "clause1", r.instance.labels.at("c1.l1"));
    auto l2 = local_of(r, "clause1", r.instance.labels.at("c1.l2"));
    auto l3 = local_of(r, "clause1", r.instance.labels.at("c1.l3"));
    auto join = local_of(r, "clause1", r.instance.labels.at("c1.l2|l3"));
    auto sorted_pair = [](VertexPair a, VertexPair b) {
      std::vector<VertexPair> v{a, b};
      std::sort(v.begin(), v.end());
      return v;
    };
    std::vector<std::vector<VertexPair>> expect{{l1}, sorted_pair(join, l2), sorted_pair(join, l3)};
    std::sort(expect.begin(), expect.end());
    CHECK(minimal(oracle::solutions(g, h.graph)) == expect);
  }
}

TEST_CASE("completion variable gadget cannot take both literals") {
  auto h = named_pattern("wheel4");
  auto r = reduce_3sat_to_sandwich_comp(one_clause(), h);
  auto g = carve(r, "var2");
  REQUIRE(g.free_elements.size() == 2);
  auto sols = oracle::solutions(g, h.graph);
  CHECK(sols.size() == 3);
  for (const auto& s : sols) CHECK(s.size() <= 1);
}

TEST_CASE("chain propagation on returned witnesses") {
  std::mt19937_64 rng(5);
  auto h = named_pattern("wheel4");
  std::size_t checked = 0;
  for (int t = 0; t < 20; ++t) {
    auto f = oracle::random_3cnf(rng, 3, 1 + rng() % 2);
    for (auto r : {reduce_3sat_to_sandwich_del(f, h), reduce_3sat_to_sandwich_comp(f, h)}) {
      auto sol = solve_sandwich(r.instance, h);
      REQUIRE(sol.has_value());
      for (const auto& [key, chain] : r.trace.chains) {
        if (!contains(*sol, chain.front())) continue;
        ++checked;
        for (const auto& e : chain) CHECK(contains(*sol, e));
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("equivalence with SAT on small formulas") {
  std::mt19937_64 rng(23);
  auto h = named_pattern("wheel4");
  std::vector<CnfFormula> corpus{unsat_chain(), one_clause()};
  for (int t = 0; t < 12; ++t) corpus.push_back(oracle::random_3cnf(rng, 3, 1 + rng() % 2));
  std::size_t no = 0;
  for (const auto& f : corpus) {
    bool sat = oracle::satisfiable(f);
    no += !sat;
    CHECK(solve_sandwich(reduce_3sat_to_sandwich_del(f, h).instance, h).has_value() == sat);
    CHECK(solve_sandwich(reduce_3sat_to_sandwich_comp(f, h).instance, h).has_value() == sat);
  }
  CHECK(no >= 1);
}

TEST_CASE("deletion lift attaches p(k) copies") {
  auto h = named_pattern("wheel4");
  SandwichInstance inst;
  inst.graph = Graph(7);
  for (Vertex v = 0; v + 1 < 7; ++v) inst.graph.add_edge(v, v + 1);
  inst.graph.add_edge(0, 6);
  for (Vertex v = 0; v < 5; ++v) inst.free_elements.insert({v, static_cast<Vertex>(v + 1)});
  auto r = lift_sandwich_del(inst, h, Polynomial::parse("1,1,1"));
  CHECK(r.k == 5);
  CHECK(r.copies == 6);
  CHECK(r.quarantined == 2);
  CHECK(r.instance.budget == 5);
  CHECK(r.instance.mode == Mode::deletion);
  CHECK(r.instance.graph.vertex_count() == 7 + 2 * 6 * 3);
  CHECK(r.instance.graph.edge_count() == 7 + 2 * 6 * h.graph.edge_count());
  // deleting an undeletable edge exposes its six pendant copies
  CHECK(is_h_free(r.instance.graph, h.graph));
  Graph cut = apply(r.instance.graph, Mode::deletion, {{5, 6}});
  CHECK(enumerate_induced_copies(cut, h.graph).size() == 6);
}

TEST_CASE("deletion lift with no undeletable edges is the identity") {
  auto h = named_pattern("wheel4");
  SandwichInstance inst;
  inst.graph = Graph(4);
  inst.graph.add_edge(0, 1);
  inst.graph.add_edge(2, 3);
  inst.free_elements = {{0, 1}, {2, 3}};
  auto r = lift_sandwich_del(inst, h, Polynomial::parse("1,1,1"));
  CHECK(r.instance.graph == inst.graph);
  CHECK(r.k == 2);
  CHECK(r.instance.budget == 2);
}

TEST_CASE("completion lift toy") {
  auto h = named_pattern("wheel4");
  SandwichInstance inst;
  inst.mode = Mode::completion;
  inst.graph = Graph(2);
  auto r = lift_sandwich_comp(inst, h, Polynomial{1, 1, 3});
  CHECK(r.k == 0);
  CHECK(r.copies == 3);
  CHECK(r.instance.graph.vertex_count() == 2 + 3 * 3);
  CHECK(r.instance.graph.edge_count() == 3 * (h.graph.edge_count() - 1));
  Graph filled = apply(r.instance.graph, Mode::completion, {{0, 1}});
  CHECK(oracle::copies(filled, h.graph).size() == 3);
  CHECK_FALSE(solve_min(filled, h, Mode::completion, {}, 2).has_value());
  CHECK(solve_min(r.instance.graph, h, Mode::completion, {}, 0).has_value());

  SandwichInstance none;
  none.mode = Mode::completion;
  none.graph = Graph(2);
  none.free_elements = {{0, 1}};
  auto same = lift_sandwich_comp(none, h, Polynomial{1, 1, 3});
  CHECK(same.instance.graph == none.graph);
  CHECK(same.instance.budget == 1);
}

TEST_CASE("lift mode mismatch") {
  auto h = named_pattern("wheel4");
  SandwichInstance comp;
  comp.mode = Mode::completion;
  comp.graph = Graph(3);
  CHECK_THROWS_AS(lift_sandwich_del(comp, h, {}), PreconditionError);
  SandwichInstance del;
  del.graph = Graph(3);
  CHECK_THROWS_AS(lift_sandwich_comp(del, h, {}), PreconditionError);
}

TEST_CASE("gap lifts on tiny wheel4 instances") {
  auto h = named_pattern("wheel4");
  auto p = Polynomial::parse("1,1,1");
  std::mt19937_64 rng(77);
  std::size_t yes = 0, no = 0;
  for (int t = 0; t < 12; ++t) {
    Graph g = oracle::random_graph(rng, 6, 0.7);
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    SandwichInstance inst;
    inst.graph = g;
    for (std::size_t i = 0; i < std::min<std::size_t>(3, edges.size()); ++i)
      inst.free_elements.insert(edges[i]);
    bool ok = !oracle::solutions(inst, h.graph).empty();
    (ok ? yes : no)++;
    auto lifted = lift_sandwich_del(inst, h, p);
    auto best = solve_min(lifted.instance.graph, h, Mode::deletion, {}, ok ? lifted.k : p(lifted.k));
    CHECK(best.has_value() == ok);
  }
  CHECK(yes > 0);
}

TEST_CASE("complement instance") {
  std::mt19937_64 rng(3);
  Graph g = oracle::random_graph(rng, 6, 0.5);
  BudgetedInstance del{g, Mode::deletion, named_pattern("P5"), 2};
  auto comp = complement_instance(del);
  CHECK(comp.mode == Mode::completion);
  CHECK(comp.pattern.name == "house");
  CHECK(comp.pattern == named_pattern("house"));
  CHECK(comp.budget == 2);
  CHECK(comp.graph == complement(g));
  auto back = complement_instance(comp);
  CHECK(back.graph == g);
  CHECK(back.mode == Mode::deletion);
  CHECK(back.pattern.name == "P5");
  CHECK(back.budget == 2);
  CHECK(solve_budgeted(del).has_value() == solve_budgeted(comp).has_value());
}

}
