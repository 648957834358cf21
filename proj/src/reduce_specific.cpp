#include "hfree/reduce_specific.hpp"

#include <algorithm>

#include "builder.hpp"
#include "hfree/error.hpp"

namespace hfree {

using detail::Builder;
using detail::mapped;

namespace {

using Edges = std::vector<VertexPair>;

Gadget make_gadget(std::string name, std::size_t n, const Edges& edges, Mode mode,
                   const Edges& free, std::map<std::string, VertexPair> labels,
                   const char* pattern) {
  Gadget g;
  g.name = std::move(name);
  g.instance.graph = Graph::from_edges(n, edges);
  g.instance.mode = mode;
  g.instance.free_elements = PairSet(free.begin(), free.end());
  g.instance.labels = std::move(labels);
  g.instance.validate();
  g.pattern = named_pattern(pattern);
  return g;
}

// Variable gadgets put u_T, v_T, u_F, v_F on local vertices 0..3.
const VertexPair kTop{0, 1};
const VertexPair kBottom{2, 3};

const Edges kC4VarEdges{{0, 1}, {0, 2}, {0, 5}, {0, 6}, {0, 7}, {1, 2}, {1, 3},
                        {1, 5}, {1, 7}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 5},
                        {3, 6}, {4, 6}, {5, 6}, {5, 7}, {6, 7}};
const Edges kC4VarFree{{0, 1}, {2, 3}, {0, 6}, {1, 7}, {2, 6}, {2, 5}};

const Edges kC5VarEdges{{0, 1}, {0, 2}, {0, 3}, {0, 6}, {1, 3}, {1, 4},
                        {1, 6}, {2, 3}, {2, 4}, {2, 5}, {4, 5}, {5, 6}};
const Edges kC5VarFree{{0, 1}, {2, 3}, {1, 6}};

// C4 clause: K6 on s1 t1 s2 t2 s3 t3 = 0..5 with the hexagon deletable.
struct ClauseEnds {
  Vertex s[3];
  Vertex t[3];
};
const ClauseEnds kC4Clause{{0, 2, 4}, {1, 3, 5}};

// C5 clause: cycle s a b c d with chords sb, sc, ad; s = s1 = s2.
const Edges kC5ClauseEdges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}, {0, 3}, {1, 4}};
const ClauseEnds kC5Clause{{0, 0, 1}, {2, 3, 4}};

// C4 completion clause: v1..v4 = 0..3, u1..u4 = 4..7.
const Edges kC4CompClauseEdges{{0, 3}, {3, 1}, {1, 2}, {2, 0}, {0, 5},
                               {5, 4}, {4, 1}, {2, 7}, {7, 6}, {6, 3}};
const Edges kC4CompClauseFree{{0, 1}, {2, 3}, {4, 0}, {5, 1}, {6, 2}};

Gadget c4_del_clause() {
  Edges all;
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = a + 1; b < 6; ++b) all.emplace_back(a, b);
  Edges hexagon;
  for (Vertex i = 0; i < 6; ++i) hexagon.emplace_back(i, (i + 1) % 6);
  std::map<std::string, VertexPair> labels;
  for (int i = 0; i < 3; ++i)
    labels["l" + std::to_string(i + 1)] = {kC4Clause.s[i], kC4Clause.t[i]};
  return make_gadget("c4-del clause", 6, all, Mode::deletion, hexagon, labels, "C4");
}

struct Ladder {
  std::size_t rungs;
  Vertex t(std::size_t i) const { return static_cast<Vertex>(i % rungs); }
  Vertex b(std::size_t i) const { return static_cast<Vertex>(rungs + i % rungs); }
  Vertex u(std::size_t i) const { return static_cast<Vertex>(2 * rungs + i % rungs); }
  Vertex d(std::size_t i) const { return static_cast<Vertex>(3 * rungs + i % rungs); }
  std::size_t size() const { return 4 * rungs; }

  Edges edges() const {
    Edges out;
    std::size_t r = rungs;
    for (std::size_t i = 0; i < r; ++i) {
      out.emplace_back(t(i), t(i + 1));
      out.emplace_back(b(i), b(i + 1));
      out.emplace_back(t(i), b(i));
      for (std::size_t k : {i + r - 1, i, i + 1}) {
        out.emplace_back(u(i), t(k));
        out.emplace_back(d(i), b(k));
      }
    }
    return out;
  }
  VertexPair true_diagonal(std::size_t i) const { return {t(i), b(i + 1)}; }
  VertexPair false_diagonal(std::size_t i) const { return {t(i + 1), b(i)}; }
};

Ladder ladder_for(std::size_t occurrences) {
  if (occurrences < 2)
    throw PreconditionError("ladder needs at least 2 occurrences, got " +
                            std::to_string(occurrences));
  return Ladder{4 * occurrences};
}

}  // namespace

Gadget c4_del_variable_gadget() {
  return make_gadget("c4-del variable", 8, kC4VarEdges, Mode::deletion, kC4VarFree,
                     {{"top", kTop}, {"bottom", kBottom}}, "C4");
}

Gadget c4_del_clause_gadget() { return c4_del_clause(); }

Gadget c5_del_variable_gadget() {
  return make_gadget("c5-del variable", 7, kC5VarEdges, Mode::deletion, kC5VarFree,
                     {{"top", kTop}, {"bottom", kBottom}}, "C5");
}

Gadget c5_del_clause_gadget() {
  std::map<std::string, VertexPair> labels;
  Edges chords;
  for (int i = 0; i < 3; ++i) {
    VertexPair e(kC5Clause.s[i], kC5Clause.t[i]);
    labels["l" + std::to_string(i + 1)] = e;
    chords.push_back(e);
  }
  return make_gadget("c5-del clause", 5, kC5ClauseEdges, Mode::deletion, chords, labels, "C5");
}

Gadget c4_comp_variable_gadget(std::size_t occurrences) {
  Ladder l = ladder_for(occurrences);
  Edges free;
  for (std::size_t i = 0; i < l.rungs; ++i) {
    free.push_back(l.true_diagonal(i));
    free.push_back(l.false_diagonal(i));
  }
  return make_gadget("c4-comp ladder p=" + std::to_string(occurrences), l.size(), l.edges(),
                     Mode::completion, free,
                     {{"top", l.true_diagonal(0)}, {"bottom", l.false_diagonal(0)}}, "C4");
}

Gadget c4_comp_clause_gadget() {
  return make_gadget("c4-comp clause", 8, kC4CompClauseEdges, Mode::completion,
                     kC4CompClauseFree,
                     {{"l1", {4, 0}}, {"l2", {5, 1}}, {"l3", {6, 2}}, {"v1v2", {0, 1}},
                      {"v3v4", {2, 3}}},
                     "C4");
}

std::vector<ModificationSet> enumerate_solutions(const SandwichInstance& inst,
                                                 const Pattern& h) {
  std::vector<VertexPair> el(inst.free_elements.begin(), inst.free_elements.end());
  if (el.size() > 20)
    throw GuardExceeded("enumerate_solutions: " + std::to_string(el.size()) +
                        " free elements exceeds guard 20");
  InducedMatcher matcher(h.graph);
  std::vector<ModificationSet> out;
  for (std::uint32_t mask = 0; mask < (1u << el.size()); ++mask) {
    ModificationSet f;
    for (std::size_t i = 0; i < el.size(); ++i)
      if ((mask >> i) & 1) f.push_back(el[i]);
    if (!matcher.find(apply(inst.graph, inst.mode, f))) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool free_part_has_c4(const SandwichInstance& inst) {
  std::vector<VertexPair> el(inst.free_elements.begin(), inst.free_elements.end());
  return has_c4_subgraph(inst.graph.vertex_count(), el);
}

namespace {

bool has(const ModificationSet& f, VertexPair e) {
  return std::binary_search(f.begin(), f.end(), e);
}

std::string fact_name(SolutionFact::Kind k) {
  switch (k) {
    case SolutionFact::Kind::two_solutions: return "two-solutions";
    case SolutionFact::Kind::never_all: return "never-all";
    case SolutionFact::Kind::each_omits_one: return "each-omits-one";
    case SolutionFact::Kind::never_none: return "never-none";
    case SolutionFact::Kind::each_only_one: return "each-only-one";
  }
  return "?";
}

bool fact_holds(const SolutionFact& fact, const std::vector<ModificationSet>& sols) {
  const auto& p = fact.pairs;
  auto count_in = [&](const ModificationSet& f) {
    std::size_t c = 0;
    for (const auto& e : p) c += has(f, e);
    return c;
  };
  switch (fact.kind) {
    case SolutionFact::Kind::two_solutions: {
      if (sols.size() != 2) return false;
      auto top = [&](const ModificationSet& f) { return has(f, p[0]) && !has(f, p[1]); };
      auto bottom = [&](const ModificationSet& f) { return has(f, p[1]) && !has(f, p[0]); };
      return (top(sols[0]) && bottom(sols[1])) || (top(sols[1]) && bottom(sols[0]));
    }
    case SolutionFact::Kind::never_all:
      return std::none_of(sols.begin(), sols.end(),
                          [&](const auto& f) { return count_in(f) == p.size(); });
    case SolutionFact::Kind::never_none:
      return std::none_of(sols.begin(), sols.end(),
                          [&](const auto& f) { return count_in(f) == 0; });
    case SolutionFact::Kind::each_omits_one:
      for (const auto& e : p)
        if (std::none_of(sols.begin(), sols.end(), [&](const auto& f) {
              return !has(f, e) && count_in(f) == p.size() - 1;
            }))
          return false;
      return true;
    case SolutionFact::Kind::each_only_one:
      for (const auto& e : p)
        if (std::none_of(sols.begin(), sols.end(),
                         [&](const auto& f) { return has(f, e) && count_in(f) == 1; }))
          return false;
      return true;
  }
  return false;
}

GadgetContract variable_contract(Gadget g) {
  auto& labels = g.instance.labels;
  SolutionFact fact{SolutionFact::Kind::two_solutions, {labels.at("top"), labels.at("bottom")}};
  return {std::move(g), {fact}, true};
}

GadgetContract clause_contract(Gadget g, bool completion) {
  auto& labels = g.instance.labels;
  std::vector<VertexPair> triple{labels.at("l1"), labels.at("l2"), labels.at("l3")};
  if (completion)
    return {std::move(g),
            {{SolutionFact::Kind::never_none, triple},
             {SolutionFact::Kind::each_only_one, triple}},
            true};
  bool c4 = g.pattern.name == "C4";
  return {std::move(g),
          {{SolutionFact::Kind::never_all, triple},
           {SolutionFact::Kind::each_omits_one, triple}},
          c4};
}

}  // namespace

ContractResult check_contract(const GadgetContract& c) {
  ContractResult r;
  r.name = c.gadget.name;
  auto sols = enumerate_solutions(c.gadget.instance, c.gadget.pattern);
  r.solutions = sols.size();
  r.holds = true;
  for (const auto& fact : c.facts)
    if (!fact_holds(fact, sols)) {
      r.holds = false;
      r.detail += fact_name(fact.kind) + " violated; ";
    }
  if (c.free_part_c4_free && free_part_has_c4(c.gadget.instance)) {
    r.holds = false;
    r.detail += "free elements contain a C4; ";
  }
  if (r.holds) r.detail = std::to_string(sols.size()) + " solutions";
  return r;
}

std::vector<GadgetContract> shipped_contracts() {
  std::vector<GadgetContract> out;
  out.push_back(variable_contract(c4_del_variable_gadget()));
  out.push_back(clause_contract(c4_del_clause_gadget(), false));
  out.push_back(variable_contract(c5_del_variable_gadget()));
  out.push_back(clause_contract(c5_del_clause_gadget(), false));
  out.push_back(variable_contract(c4_comp_variable_gadget(2)));
  out.push_back(clause_contract(c4_comp_clause_gadget(), true));
  return out;
}

namespace {

// Checked once per process before the deletion reductions build anything.
void assert_deletion_gadgets() {
  static const std::string failure = [] {
    std::string why;
    for (auto& c : shipped_contracts()) {
      if (c.gadget.instance.mode != Mode::deletion) continue;
      auto r = check_contract(c);
      if (!r.holds) why += r.name + ": " + r.detail;
    }
    return why;
  }();
  if (!failure.empty()) throw GadgetContractError("gadget self-check failed: " + failure);
}

std::string var_name(std::size_t x) { return "x" + std::to_string(x + 1); }
std::string clause_name(std::size_t j) { return "c" + std::to_string(j + 1); }

void check_formula(const CnfFormula& f) {
  if (!is_exact_3cnf(f))
    throw PreconditionError("formula must be normalized to exact 3CNF");
}

// Places one deletion variable gadget per variable and records its pairs.
void place_variables(Builder& b, ReductionTrace& trace, const CnfFormula& f,
                     const Gadget& g, std::vector<std::vector<Vertex>>& maps) {
  for (std::size_t x = 0; x < f.variable_count; ++x) {
    auto map = b.place(g.instance.graph);
    std::size_t aux = 0;
    for (const auto& e : g.instance.free_elements) {
      VertexPair he = mapped(map, e);
      b.make_free(he);
      if (e == kTop)
        b.label(var_name(x) + ".top", he);
      else if (e == kBottom)
        b.label(var_name(x) + ".bottom", he);
      else
        b.label(var_name(x) + ".aux" + std::to_string(++aux), he);
    }
    trace.variable_literals[{x, true}] = mapped(map, kTop);
    trace.variable_literals[{x, false}] = mapped(map, kBottom);
    trace.gadget_extents["var" + std::to_string(x + 1)] = detail::sorted(map);
    maps.push_back(map);
  }
}

// Places one deletion clause gadget per clause; returns host s_i, t_i.
std::vector<ClauseEnds> place_clauses(Builder& b, ReductionTrace& trace, const CnfFormula& f,
                                      const Gadget& g, const ClauseEnds& local) {
  std::vector<ClauseEnds> ends;
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    auto map = b.place(g.instance.graph);
    std::size_t aux = 0;
    for (const auto& e : g.instance.free_elements) {
      VertexPair he = mapped(map, e);
      b.make_free(he);
      bool literal = false;
      for (int i = 0; i < 3; ++i)
        if (e == VertexPair(local.s[i], local.t[i])) {
          b.label(clause_name(j) + ".l" + std::to_string(i + 1), he);
          trace.clause_literals[{j, static_cast<std::size_t>(i)}] = he;
          literal = true;
        }
      if (!literal) b.label(clause_name(j) + ".aux" + std::to_string(++aux), he);
    }
    ClauseEnds host{};
    for (int i = 0; i < 3; ++i) {
      host.s[i] = map[local.s[i]];
      host.t[i] = map[local.t[i]];
    }
    ends.push_back(host);
    trace.gadget_extents["clause" + std::to_string(j + 1)] = detail::sorted(map);
  }
  return ends;
}

}  // namespace

Reduction reduce_3sat_to_sandwich_c4_del(const CnfFormula& f) {
  check_formula(f);
  assert_deletion_gadgets();
  Builder b(Mode::deletion);
  ReductionTrace trace;
  std::vector<std::vector<Vertex>> maps;
  place_variables(b, trace, f, c4_del_variable_gadget(), maps);
  auto ends = place_clauses(b, trace, f, c4_del_clause_gadget(), kC4Clause);
  for (std::size_t j = 0; j < f.clauses.size(); ++j)
    for (int i = 0; i < 3; ++i) {
      const Literal& lit = f.clauses[j][i];
      VertexPair uv = trace.variable_literals.at({lit.var, lit.positive});
      b.graph().add_edge(ends[j].s[i], uv.u);
      b.graph().add_edge(ends[j].t[i], uv.v);
    }
  auto inst = b.finish();
  if (free_part_has_c4(inst))
    throw GadgetContractError("c4-del instance has a C4 of deletable edges");
  return {std::move(inst), std::move(trace)};
}

Reduction reduce_3sat_to_sandwich_c5_del(const CnfFormula& f) {
  check_formula(f);
  assert_deletion_gadgets();
  Builder b(Mode::deletion);
  ReductionTrace trace;
  std::vector<std::vector<Vertex>> maps;
  place_variables(b, trace, f, c5_del_variable_gadget(), maps);
  auto ends = place_clauses(b, trace, f, c5_del_clause_gadget(), kC5Clause);
  for (std::size_t j = 0; j < f.clauses.size(); ++j)
    for (int i = 0; i < 3; ++i) {
      const Literal& lit = f.clauses[j][i];
      VertexPair uv = trace.variable_literals.at({lit.var, lit.positive});
      Vertex mid = b.fresh();
      b.graph().add_edge(ends[j].s[i], mid);
      b.graph().add_edge(mid, uv.u);
      b.graph().add_edge(ends[j].t[i], uv.v);
    }
  return {b.finish(), std::move(trace)};
}

Reduction reduce_3sat_to_sandwich_c4_comp(const CnfFormula& f) {
  check_formula(f);
  auto occ = occurrence_counts(f);
  for (std::size_t x = 0; x < occ.size(); ++x)
    if (occ[x] == 1)
      throw PreconditionError("variable " + std::to_string(x + 1) +
                              " occurs once; duplicate the formula first");
  Builder b(Mode::completion);
  ReductionTrace trace;
  std::vector<std::vector<Vertex>> ladder_maps(f.variable_count);
  std::vector<Ladder> ladders(f.variable_count, Ladder{0});
  for (std::size_t x = 0; x < f.variable_count; ++x) {
    if (occ[x] == 0) continue;
    Ladder l = ladder_for(occ[x]);
    auto map = b.place(Graph::from_edges(l.size(), l.edges()));
    for (std::size_t i = 0; i < l.rungs; ++i) {
      VertexPair tr = mapped(map, l.true_diagonal(i));
      VertexPair fa = mapped(map, l.false_diagonal(i));
      b.make_free(tr);
      b.make_free(fa);
      b.label(var_name(x) + ".T" + std::to_string(i), tr);
      b.label(var_name(x) + ".F" + std::to_string(i), fa);
    }
    trace.variable_literals[{x, true}] = mapped(map, l.true_diagonal(0));
    trace.variable_literals[{x, false}] = mapped(map, l.false_diagonal(0));
    trace.gadget_extents["var" + std::to_string(x + 1)] = detail::sorted(map);
    ladder_maps[x] = map;
    ladders[x] = l;
  }
  Gadget clause = c4_comp_clause_gadget();
  std::vector<std::size_t> seen(f.variable_count, 0);
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    auto map = b.place(clause.instance.graph);
    for (const auto& [name, e] : clause.instance.labels) {
      VertexPair he = mapped(map, e);
      b.make_free(he);
      b.label(clause_name(j) + "." + name, he);
    }
    for (std::size_t i = 0; i < 3; ++i) {
      trace.clause_literals[{j, i}] =
          mapped(map, clause.instance.labels.at("l" + std::to_string(i + 1)));
      const Literal& lit = f.clauses[j][i];
      const Ladder& l = ladders[lit.var];
      const auto& lm = ladder_maps[lit.var];
      std::size_t occ_index = seen[lit.var]++;
      Vertex v = map[i];
      Vertex u = map[4 + i];
      std::size_t to_v = lit.positive ? 4 * occ_index + 1 : 4 * occ_index;
      std::size_t to_u = lit.positive ? 4 * occ_index : 4 * occ_index + 1;
      b.graph().add_edge(lm[l.t(to_v)], v);
      b.graph().add_edge(lm[l.b(to_u)], u);
    }
    trace.gadget_extents["clause" + std::to_string(j + 1)] = detail::sorted(map);
  }
  auto inst = b.finish();
  if (free_part_has_c4(inst))
    throw GadgetContractError("c4-comp instance has a C4 of fillable non-edges");
  return {std::move(inst), std::move(trace)};
}

SandwichInstance reduce_c4comp_to_house_comp(const SandwichInstance& inst) {
  if (inst.mode != Mode::completion)
    throw PreconditionError("house completion needs a completion instance");
  inst.validate();
  if (free_part_has_c4(inst))
    throw PreconditionError("fillable non-edges contain a C4");
  SandwichInstance out = inst;
  for (const auto& e : inst.graph.edges()) {
    Vertex w = out.graph.add_vertex();
    out.graph.add_edge(w, e.u);
    out.graph.add_edge(w, e.v);
  }
  return out;
}

LiftFamily parse_lift_family(const std::string& name) {
  if (name == "c4-del") return LiftFamily::c4_del;
  if (name == "c5-del") return LiftFamily::c5_del;
  if (name == "c4-comp") return LiftFamily::c4_comp;
  if (name == "house-comp") return LiftFamily::house_comp;
  throw PreconditionError("unknown lift family " + name);
}

std::string to_string(LiftFamily f) {
  switch (f) {
    case LiftFamily::c4_del: return "c4-del";
    case LiftFamily::c5_del: return "c5-del";
    case LiftFamily::c4_comp: return "c4-comp";
    case LiftFamily::house_comp: return "house-comp";
  }
  return "?";
}

Pattern family_pattern(LiftFamily f) {
  switch (f) {
    case LiftFamily::c4_del:
    case LiftFamily::c4_comp: return named_pattern("C4");
    case LiftFamily::c5_del: return named_pattern("C5");
    case LiftFamily::house_comp: return named_pattern("house");
  }
  return named_pattern("C4");
}

namespace {

std::vector<VertexPair> quarantined(const SandwichInstance& inst) {
  auto all = inst.mode == Mode::deletion ? inst.graph.edges() : inst.graph.non_edges();
  std::vector<VertexPair> out;
  for (const auto& e : all)
    if (!inst.free_elements.count(e)) out.push_back(e);
  return out;
}

LiftResult finish_lift(const SandwichInstance& inst, Graph g, Pattern h, std::size_t copies,
                       std::size_t quarantined_count) {
  LiftResult r;
  r.k = inst.free_elements.size();
  r.instance = {std::move(g), inst.mode, std::move(h), r.k};
  r.copies = copies;
  r.quarantined = quarantined_count;
  return r;
}

void add_path(Graph& g, Vertex from, Vertex to, std::size_t inner) {
  Vertex prev = from;
  for (std::size_t i = 0; i < inner; ++i) {
    Vertex x = g.add_vertex();
    g.add_edge(prev, x);
    prev = x;
  }
  g.add_edge(prev, to);
}

}  // namespace

LiftResult lift_specific(const SandwichInstance& inst, LiftFamily family, const Polynomial& p) {
  bool del = family == LiftFamily::c4_del || family == LiftFamily::c5_del;
  if ((inst.mode == Mode::deletion) != del)
    throw PreconditionError("lift family " + to_string(family) + " does not match mode " +
                            std::string(to_string(inst.mode)));
  inst.validate();
  std::size_t pk = p(inst.free_elements.size());
  auto q = quarantined(inst);
  Graph g = inst.graph;
  std::size_t copies = 0;
  for (const auto& e : q) {
    switch (family) {
      case LiftFamily::c4_del:
        copies = pk + 2;
        for (std::size_t i = 0; i < copies; ++i) add_path(g, e.u, e.v, 1);
        break;
      case LiftFamily::c5_del:
        copies = pk + 1;
        for (std::size_t i = 0; i < copies; ++i) add_path(g, e.u, e.v, 2);
        for (std::size_t i = 0; i < copies; ++i) add_path(g, e.u, e.v, 1);
        break;
      case LiftFamily::c4_comp:
      case LiftFamily::house_comp:
        copies = pk + 1;
        for (std::size_t i = 0; i < copies; ++i) {
          Vertex a = g.add_vertex();
          Vertex c = g.add_vertex();
          g.add_edge(e.u, a);
          g.add_edge(a, c);
          g.add_edge(c, e.v);
          if (family == LiftFamily::house_comp) {
            Vertex w = g.add_vertex();
            g.add_edge(w, a);
            g.add_edge(w, c);
          }
        }
        break;
    }
  }
  if (q.empty()) copies = family == LiftFamily::c4_del ? pk + 2 : pk + 1;
  return finish_lift(inst, std::move(g), family_pattern(family), copies, q.size());
}

LiftResult reduce_c4del_to_house_del(const SandwichInstance& inst, const Polynomial& p) {
  if (inst.mode != Mode::deletion)
    throw PreconditionError("house deletion needs a deletion instance");
  inst.validate();
  if (free_part_has_c4(inst))
    throw PreconditionError("some C4 subgraph has only deletable edges");
  std::size_t copies = p(inst.free_elements.size()) + 2;
  auto q = quarantined(inst);
  Graph g = inst.graph;
  for (const auto& e : q)
    for (std::size_t i = 0; i < copies; ++i) {
      Vertex a = g.add_vertex();
      Vertex b = g.add_vertex();
      g.add_edge(e.u, a);
      g.add_edge(e.u, b);
      g.add_edge(e.v, b);
      g.add_edge(a, b);
    }
  return finish_lift(inst, std::move(g), named_pattern("house"), copies, q.size());
}

}  // namespace hfree
