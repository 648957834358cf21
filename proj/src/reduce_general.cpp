#include "hfree/reduce_general.hpp"

#include <limits>

#include "builder.hpp"
#include "hfree/error.hpp"

namespace hfree {

using detail::Builder;
using detail::identify;
using detail::mapped;

namespace {

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
  if (x != 0 && y > std::numeric_limits<std::uint64_t>::max() / x)
    throw PreconditionError("polynomial value overflows");
  return x * y;
}

}  // namespace

std::uint64_t Polynomial::operator()(std::uint64_t l) const {
  std::uint64_t v = a;
  for (std::uint64_t i = 0; i < d; ++i) v = checked_mul(v, l);
  if (v > std::numeric_limits<std::uint64_t>::max() - c)
    throw PreconditionError("polynomial value overflows");
  return v + c;
}

Polynomial Polynomial::parse(std::string_view text) {
  std::vector<std::uint64_t> parts;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty() || cur.find_first_not_of("0123456789") != std::string::npos ||
        cur.size() > 18)
      throw PreconditionError("polynomial must be 'a,d,c' with integers: " +
                              std::string(text));
    parts.push_back(std::stoull(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',')
      flush();
    else
      cur += ch;
  }
  flush();
  if (parts.size() != 3)
    throw PreconditionError("polynomial must be 'a,d,c': " + std::string(text));
  Polynomial p{parts[0], parts[1], parts[2]};
  if (p.a < 1 || p.d < 1) throw PreconditionError("polynomial needs a >= 1 and d >= 1");
  return p;
}

std::string Polynomial::to_string() const {
  return std::to_string(a) + "," + std::to_string(d) + "," + std::to_string(c);
}

namespace {

std::string var_label(std::size_t x, bool positive) {
  return (positive ? "x" : "~x") + std::to_string(x + 1);
}

std::string clause_label(std::size_t j, std::size_t pos) {
  return "c" + std::to_string(j + 1) + ".l" + std::to_string(pos + 1);
}

void check_formula(const CnfFormula& f) {
  if (!is_exact_3cnf(f))
    throw PreconditionError("formula must be normalized to exact 3CNF");
}

// Builds the connector chains shared by both general reductions.
// `in_local`/`out_local` are the connector's identified pairs in H, and
// `connector` is the local graph the chain places.
void build_chains(Builder& b, ReductionTrace& trace, const CnfFormula& f,
                  const Graph& connector, VertexPair in_local, VertexPair out_local,
                  std::size_t length) {
  for (std::size_t j = 0; j < f.clauses.size(); ++j)
    for (std::size_t pos = 0; pos < 3; ++pos) {
      const Literal& lit = f.clauses[j][pos];
      VertexPair prev = trace.clause_literals.at({j, pos});
      VertexPair target = trace.variable_literals.at({lit.var, lit.positive});
      std::vector<VertexPair> chain{prev};
      std::vector<Vertex> extent;
      for (std::size_t i = 0; i < length; ++i) {
        std::map<Vertex, Vertex> fixed;
        identify(fixed, in_local, prev);
        bool last = i + 1 == length;
        if (last) identify(fixed, out_local, target);
        auto map = b.place(connector, fixed);
        extent.insert(extent.end(), map.begin(), map.end());
        VertexPair out = mapped(map, out_local);
        if (!last) {
          b.make_free(out);
          b.label(clause_label(j, pos) + ".k" + std::to_string(i + 1), out);
        }
        chain.push_back(out);
        prev = out;
      }
      trace.chains[{j, pos}] = chain;
      trace.gadget_extents["chain" + std::to_string(j + 1) + "." + std::to_string(pos + 1)] =
          detail::sorted(extent);
    }
}

VertexPair first_edge_disjoint_from(const Graph& h, VertexPair avoid) {
  for (const auto& e : h.edges())
    if (e.disjoint_from(avoid)) return e;
  throw RequirementError("pattern has no edge disjoint from a non-edge");
}

}  // namespace

Reduction reduce_3sat_to_sandwich_del(const CnfFormula& f, const Pattern& h) {
  require(h, {Requirement::three_connected(), Requirement::min_non_edges(2)});
  check_formula(f);
  Builder b(Mode::deletion);
  ReductionTrace trace;
  const auto& ne = h.non_edges;
  auto edges = h.graph.edges();

  for (std::size_t x = 0; x < f.variable_count; ++x) {
    auto map = b.place(h.graph);
    for (int pol = 0; pol < 2; ++pol) {
      VertexPair e = mapped(map, ne[pol]);
      b.graph().add_edge(e);
      b.make_free(e);
      b.label(var_label(x, pol == 0), e);
      trace.variable_literals[{x, pol == 0}] = e;
    }
    trace.gadget_extents["var" + std::to_string(x + 1)] = detail::sorted(map);
  }
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    auto map = b.place(h.graph);
    for (std::size_t pos = 0; pos < 3; ++pos) {
      VertexPair e = mapped(map, edges[pos]);
      b.make_free(e);
      b.label(clause_label(j, pos), e);
      trace.clause_literals[{j, pos}] = e;
    }
    trace.gadget_extents["clause" + std::to_string(j + 1)] = detail::sorted(map);
  }
  VertexPair in = ne[0];
  VertexPair out = first_edge_disjoint_from(h.graph, in);
  Graph connector = h.graph;
  connector.add_edge(in);
  build_chains(b, trace, f, connector, in, out, h.p + 2);
  return {b.finish(), std::move(trace)};
}

Reduction reduce_3sat_to_sandwich_comp(const CnfFormula& f, const Pattern& h) {
  require(h, {Requirement::three_connected(), Requirement::min_non_edges(2)});
  check_formula(f);
  Builder b(Mode::completion);
  ReductionTrace trace;
  const auto& ne = h.non_edges;
  auto edges = h.graph.edges();

  Graph var_local = h.graph;
  var_local.remove_edge(edges[0]);
  var_local.remove_edge(edges[1]);
  for (std::size_t x = 0; x < f.variable_count; ++x) {
    auto map = b.place(var_local);
    for (int pol = 0; pol < 2; ++pol) {
      VertexPair e = mapped(map, edges[pol]);
      b.make_free(e);
      b.label(var_label(x, pol == 0), e);
      trace.variable_literals[{x, pol == 0}] = e;
    }
    trace.gadget_extents["var" + std::to_string(x + 1)] = detail::sorted(map);
  }

  Graph second = h.graph;
  second.remove_edge(edges[0]);
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    auto first_map = b.place(h.graph);
    VertexPair l1 = mapped(first_map, ne[0]);
    VertexPair join = mapped(first_map, ne[1]);
    std::map<Vertex, Vertex> fixed;
    identify(fixed, edges[0], join);
    auto second_map = b.place(second, fixed);
    VertexPair l2 = mapped(second_map, ne[0]);
    VertexPair l3 = mapped(second_map, ne[1]);
    std::string base = "c" + std::to_string(j + 1);
    for (auto e : {l1, join, l2, l3}) b.make_free(e);
    b.label(clause_label(j, 0), l1);
    b.label(base + ".l2|l3", join);
    b.label(clause_label(j, 1), l2);
    b.label(clause_label(j, 2), l3);
    trace.clause_literals[{j, 0}] = l1;
    trace.clause_literals[{j, 1}] = l2;
    trace.clause_literals[{j, 2}] = l3;
    auto extent = first_map;
    extent.insert(extent.end(), second_map.begin(), second_map.end());
    std::sort(extent.begin(), extent.end());
    extent.erase(std::unique(extent.begin(), extent.end()), extent.end());
    trace.gadget_extents["clause" + std::to_string(j + 1)] = extent;
  }

  VertexPair out = ne[0];
  VertexPair in = first_edge_disjoint_from(h.graph, out);
  Graph connector = h.graph;
  connector.remove_edge(in);
  build_chains(b, trace, f, connector, in, out, h.p + 2);
  return {b.finish(), std::move(trace)};
}

namespace {

// Attaches `copies` placements of `gadget` at every quarantined pair,
// identifying the gadget's `anchor` with the pair.
LiftResult attach_everywhere(const SandwichInstance& inst, const std::vector<VertexPair>& quarantined,
                             const Graph& gadget, VertexPair anchor, std::size_t copies,
                             const Pattern& h) {
  SandwichInstance base = inst;
  base.free_elements.clear();
  base.labels.clear();
  Builder b(std::move(base));
  for (const auto& e : quarantined)
    for (std::size_t i = 0; i < copies; ++i) {
      std::map<Vertex, Vertex> fixed;
      identify(fixed, anchor, e);
      b.place(gadget, fixed);
    }
  LiftResult r;
  r.instance.graph = std::move(b.graph());
  r.instance.mode = inst.mode;
  r.instance.pattern = h;
  r.k = inst.free_elements.size();
  r.instance.budget = r.k;
  r.copies = copies;
  r.quarantined = quarantined.size();
  return r;
}

std::vector<VertexPair> undeletable_edges(const SandwichInstance& inst) {
  std::vector<VertexPair> out;
  for (const auto& e : inst.graph.edges())
    if (!inst.free_elements.count(e)) out.push_back(e);
  return out;
}

std::vector<VertexPair> unfillable_non_edges(const SandwichInstance& inst) {
  std::vector<VertexPair> out;
  for (const auto& e : inst.graph.non_edges())
    if (!inst.free_elements.count(e)) out.push_back(e);
  return out;
}

}  // namespace

LiftResult lift_deletion_with_copies(const SandwichInstance& inst, const Pattern& h,
                                     std::size_t copies) {
  if (inst.mode != Mode::deletion) throw PreconditionError("deletion lift needs a deletion instance");
  require(h, {Requirement::three_connected(), Requirement::min_non_edges(1)});
  inst.validate();
  Graph gadget = h.graph;
  return attach_everywhere(inst, undeletable_edges(inst), gadget, h.non_edges[0], copies, h);
}

LiftResult lift_sandwich_del(const SandwichInstance& inst, const Pattern& h,
                             const Polynomial& p) {
  return lift_deletion_with_copies(inst, h, p(inst.free_elements.size()));
}

LiftResult lift_sandwich_comp(const SandwichInstance& inst, const Pattern& h,
                              const Polynomial& p) {
  if (inst.mode != Mode::completion)
    throw PreconditionError("completion lift needs a completion instance");
  require(h, {Requirement::three_connected(), Requirement::min_edges(1)});
  inst.validate();
  VertexPair e = h.graph.edges()[0];
  Graph gadget = h.graph;
  gadget.remove_edge(e);
  return attach_everywhere(inst, unfillable_non_edges(inst), gadget, e,
                           p(inst.free_elements.size()), h);
}

BudgetedInstance complement_instance(const BudgetedInstance& inst) {
  return {complement(inst.graph), flip(inst.mode), complement_pattern(inst.pattern),
          inst.budget};
}

}  // namespace hfree
