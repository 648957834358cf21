#include "hfree/minhorn.hpp"

#include <algorithm>
#include <set>

#include "builder.hpp"
#include "hfree/error.hpp"

namespace hfree {

using detail::Builder;
using detail::mapped;

std::size_t expected_arity(const Constraint& c) {
  std::size_t t = c.n * (c.n - 1) / 2;
  switch (c.kind) {
    case ConstraintKind::f1: return 3;
    case ConstraintKind::f2: return 1;
    case ConstraintKind::fn: return t;
    case ConstraintKind::gn: return t == 0 ? 0 : t - 1;
  }
  return 0;
}

bool eval_constraint(const Constraint& c, const Assignment& a) {
  if (c.args.size() != expected_arity(c))
    throw PreconditionError("constraint arity " + std::to_string(c.args.size()) +
                            ", expected " + std::to_string(expected_arity(c)));
  std::size_t ones = 0;
  for (std::size_t x : c.args) {
    if (x >= a.size()) throw PreconditionError("constraint argument out of range");
    ones += a[x];
  }
  switch (c.kind) {
    case ConstraintKind::f2: return ones == 1;
    case ConstraintKind::gn: return ones > 0;
    case ConstraintKind::f1:
    case ConstraintKind::fn: return ones != 1;
  }
  return false;
}

std::optional<MinOnesSolution> minones_brute_force(const MinOnesInstance& inst) {
  std::size_t n = inst.variable_count;
  if (n > kSatGuard)
    throw GuardExceeded("minones_brute_force: " + std::to_string(n) +
                        " variables exceeds guard " + std::to_string(kSatGuard));
  Assignment a(n, false);
  for (std::size_t k = 0; k <= n; ++k) {
    // subsets of size k in lexicographic order
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::fill(a.begin(), a.end(), false);
      for (std::size_t i : idx) a[i] = true;
      bool ok = std::all_of(inst.constraints.begin(), inst.constraints.end(),
                            [&](const Constraint& c) { return eval_constraint(c, a); });
      if (ok) return MinOnesSolution{a, k};
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::size_t horn_group_size(std::size_t variable_count) {
  return 9 * variable_count * variable_count + 2;
}

namespace {

struct Normalized {
  std::vector<Constraint> f1;
  std::vector<bool> f2;
  std::vector<std::size_t> delta;
};

Normalized normalize(const MinOnesInstance& inst) {
  Normalized out;
  out.f2.assign(inst.variable_count, false);
  out.delta.assign(inst.variable_count, 0);
  std::set<std::vector<std::size_t>> seen;
  for (const auto& c : inst.constraints) {
    if (c.args.size() != expected_arity(c))
      throw PreconditionError("constraint arity mismatch");
    for (std::size_t x : c.args)
      if (x >= inst.variable_count) throw PreconditionError("constraint argument out of range");
    if (c.kind == ConstraintKind::f2) {
      out.f2[c.args[0]] = true;
    } else if (c.kind == ConstraintKind::f1) {
      auto key = c.args;
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) continue;
      out.f1.push_back(c);
      for (std::size_t x : c.args) ++out.delta[x];
    } else {
      throw PreconditionError("only f1 and f2 constraints can be reduced");
    }
  }
  return out;
}

// Group edges other than pendants: x_out, x_in unless F2(x), 3 per occurrence.
std::size_t fixed_part(const Normalized& nz, std::size_t x) {
  return 1 + (nz.f2[x] ? 0 : 1) + 3 * nz.delta[x];
}

Graph clique(std::size_t n) {
  Graph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

std::string var_name(std::size_t x) { return "x" + std::to_string(x + 1); }

}  // namespace

std::size_t min_feasible_group_size(const MinOnesInstance& inst) {
  auto nz = normalize(inst);
  std::size_t need = 0;
  for (std::size_t x = 0; x < inst.variable_count; ++x) need = std::max(need, fixed_part(nz, x));
  return need;
}

QuarantinedInstance reduce_minones_to_quarantined(const MinOnesInstance& inst, std::size_t n,
                                                  const HornOptions& opts) {
  if (n < 5) throw PreconditionError("clique size must be at least 5");
  auto nz = normalize(inst);
  std::size_t nv = inst.variable_count;
  for (std::size_t x = 0; x < nv; ++x)
    if (nz.delta[x] > 3 * nv * nv)
      throw PreconditionError("variable " + var_name(x) + " occurs too often");
  std::size_t delta_size = opts.group_size ? *opts.group_size : horn_group_size(nv);
  std::vector<std::size_t> pendants(nv);
  for (std::size_t x = 0; x < nv; ++x) {
    if (fixed_part(nz, x) > delta_size)
      throw PreconditionError("group size " + std::to_string(delta_size) + " too small for " +
                              var_name(x) + ", needs " + std::to_string(fixed_part(nz, x)));
    pendants[x] = delta_size - fixed_part(nz, x);
  }

  Builder b(Mode::deletion);
  std::vector<std::vector<VertexPair>> groups(nv);
  std::map<std::string, VertexPair> labels;
  auto add = [&](std::size_t x, VertexPair e, const std::string& name) {
    groups[x].push_back(e);
    labels[name] = e;
  };
  Graph kn = clique(n);
  Graph kn_minus = kn;
  kn_minus.remove_edge(0, 1);
  const VertexPair in_local{0, 1}, out_local{2, 3};

  std::vector<VertexPair> x_in(nv), x_out(nv);
  for (std::size_t x = 0; x < nv; ++x) {
    auto map = b.place(nz.f2[x] ? kn_minus : kn);
    x_in[x] = mapped(map, in_local);
    x_out[x] = mapped(map, out_local);
    if (!nz.f2[x]) add(x, x_in[x], var_name(x) + ".in");
    add(x, x_out[x], var_name(x) + ".out");
  }

  std::vector<std::size_t> used(nv, 0);
  auto next_label = [&](std::size_t x) { return var_name(x) + "." + std::to_string(++used[x]); };

  const VertexPair labelled_local[3] = {{0, 1}, {0, 2}, {0, 3}};
  std::vector<std::vector<VertexPair>> constraint_edges;
  for (const auto& c : nz.f1) {
    auto map = b.place(kn);
    std::vector<VertexPair> edges;
    for (std::size_t q = 0; q < 3; ++q) {
      VertexPair e = mapped(map, labelled_local[q]);
      add(c.args[q], e, next_label(c.args[q]));
      edges.push_back(e);
    }
    constraint_edges.push_back(edges);
  }

  for (std::size_t j = 0; j < nz.f1.size(); ++j)
    for (std::size_t q = 0; q < 3; ++q) {
      std::size_t x = nz.f1[j].args[q];
      VertexPair prev = x_out[x];
      for (int step = 0; step < 3; ++step) {
        std::map<Vertex, Vertex> fixed;
        detail::identify(fixed, in_local, prev);
        if (step == 2) detail::identify(fixed, out_local, constraint_edges[j][q]);
        auto map = b.place(kn, fixed);
        prev = mapped(map, out_local);
        if (step < 2) add(x, prev, next_label(x));
      }
    }

  for (std::size_t x = 0; x < nv; ++x)
    for (std::size_t i = 0; i < pendants[x]; ++i) {
      std::map<Vertex, Vertex> fixed;
      detail::identify(fixed, in_local, x_in[x]);
      auto map = b.place(nz.f2[x] ? kn_minus : kn, fixed);
      add(x, mapped(map, out_local), next_label(x));
    }

  QuarantinedInstance out;
  out.n = n;
  out.graph = std::move(b.graph());
  out.labels = std::move(labels);
  out.groups.group_size = delta_size;
  PairSet grouped;
  for (auto& g : groups) {
    std::sort(g.begin(), g.end());
    if (g.size() != delta_size)
      throw GadgetContractError("group size " + std::to_string(g.size()) + " differs from " +
                                std::to_string(delta_size));
    for (const auto& e : g)
      if (!out.graph.has_edge(e) || !grouped.insert(e).second)
        throw GadgetContractError("group edges overlap or are missing");
  }
  out.groups.groups = std::move(groups);
  for (const auto& e : out.graph.edges())
    if (!grouped.count(e)) out.quarantine.insert(e);
  return out;
}

LiftResult lift_quarantine(const Graph& g, const PairSet& quarantine, std::size_t n,
                           std::optional<std::size_t> copies) {
  if (n < 5) throw PreconditionError("clique size must be at least 5");
  SandwichInstance inst;
  inst.graph = g;
  inst.mode = Mode::deletion;
  for (const auto& e : g.edges())
    if (!quarantine.count(e)) inst.free_elements.insert(e);
  std::size_t m = g.edge_count();
  std::size_t count = copies ? *copies : m * m;
  auto r = lift_deletion_with_copies(inst, named_pattern("K" + std::to_string(n) + "-e"), count);
  r.instance.budget = count;
  return r;
}

EdgeIndexedInstance reduce_knexdel_to_minones(const Graph& g, std::size_t n) {
  if (n < 5) throw PreconditionError("clique size must be at least 5");
  EdgeIndexedInstance out;
  out.edge_vars = g.edges();
  out.instance.variable_count = out.edge_vars.size();
  auto index_of = [&](VertexPair e) {
    auto it = std::lower_bound(out.edge_vars.begin(), out.edge_vars.end(), e);
    return static_cast<std::size_t>(it - out.edge_vars.begin());
  };
  auto emit = [&](const std::vector<Vertex>& s, ConstraintKind kind) {
    Constraint c{kind, n, {}};
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (g.has_edge(s[i], s[j])) c.args.push_back(index_of({s[i], s[j]}));
    out.instance.constraints.push_back(std::move(c));
  };
  std::string size = std::to_string(n);
  for (const auto& s : enumerate_induced_copies(g, named_pattern("K" + size + "-e").graph))
    emit(s, ConstraintKind::gn);
  for (const auto& s : enumerate_induced_copies(g, named_pattern("K" + size).graph))
    emit(s, ConstraintKind::fn);
  return out;
}

Assignment graph_solution_to_assignment(const EdgeGroupMap& groups, const ModificationSet& f) {
  PairSet del(f.begin(), f.end());
  Assignment a(groups.groups.size(), false);
  std::size_t covered = 0;
  for (std::size_t x = 0; x < groups.groups.size(); ++x) {
    std::size_t hit = 0;
    for (const auto& e : groups.groups[x]) hit += del.count(e);
    if (hit != 0 && hit != groups.groups[x].size())
      throw PreconditionError("solution deletes part of the group of " + var_name(x));
    a[x] = hit != 0;
    covered += hit;
  }
  if (covered != del.size()) throw PreconditionError("solution deletes a quarantined edge");
  return a;
}

ModificationSet assignment_to_graph_solution(const EdgeGroupMap& groups, const Assignment& a) {
  if (a.size() != groups.groups.size()) throw PreconditionError("assignment size mismatch");
  ModificationSet f;
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[x]) f.insert(f.end(), groups.groups[x].begin(), groups.groups[x].end());
  std::sort(f.begin(), f.end());
  return f;
}

Assignment edges_to_assignment(const std::vector<VertexPair>& edge_vars, const ModificationSet& f) {
  Assignment a(edge_vars.size(), false);
  for (const auto& e : f) {
    auto it = std::lower_bound(edge_vars.begin(), edge_vars.end(), e);
    if (it == edge_vars.end() || *it != e)
      throw PreconditionError("deleted pair is not an edge of the source graph");
    a[it - edge_vars.begin()] = true;
  }
  return a;
}

ModificationSet assignment_to_edges(const std::vector<VertexPair>& edge_vars, const Assignment& a) {
  if (a.size() != edge_vars.size()) throw PreconditionError("assignment size mismatch");
  ModificationSet f;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) f.push_back(edge_vars[i]);
  return f;
}

}  // namespace hfree
