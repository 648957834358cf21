#include "hfree/verify.hpp"

#include <sstream>

#include "hfree/error.hpp"
#include "hfree/formats.hpp"
#include "hfree/reduce_specific.hpp"

namespace hfree {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

std::string VerificationReport::machine_line() const {
  std::string line = "RESULT " + std::string(to_string(verdict)) + " " + check + " digest=" + digest;
  if (!details.empty()) line += " " + details;
  return line;
}

std::string VerificationReport::prose() const {
  std::string s = check + ": " + std::string(to_string(verdict));
  if (!details.empty()) s += " (" + details + ")";
  if (!witness.empty()) s += "\n  witness: " + witness;
  return s;
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string one_line(std::string text) {
  for (char& ch : text)
    if (ch == '\n') ch = ';';
  return text;
}

VerificationReport skipped(VerificationReport r, const std::string& why) {
  r.verdict = Verdict::skipped;
  r.details += (r.details.empty() ? "" : " ") + std::string("reason=\"") + why + "\"";
  return r;
}

struct Target {
  Reduction reduction;
  Pattern pattern;
};

Target build_target(const CnfFormula& norm, const std::string& target,
                    const std::optional<Pattern>& h) {
  if (target == "general-del" || target == "general-comp") {
    if (!h) throw PreconditionError("target " + target + " needs a pattern");
    auto r = target == "general-del" ? reduce_3sat_to_sandwich_del(norm, *h)
                                     : reduce_3sat_to_sandwich_comp(norm, *h);
    return {std::move(r), *h};
  }
  if (target == "c4-del") return {reduce_3sat_to_sandwich_c4_del(norm), named_pattern("C4")};
  if (target == "c5-del") return {reduce_3sat_to_sandwich_c5_del(norm), named_pattern("C5")};
  CnfFormula dup = duplicate_for_min_occurrences(norm, 2);
  if (target == "c4-comp") return {reduce_3sat_to_sandwich_c4_comp(dup), named_pattern("C4")};
  if (target == "house-comp-via-c4") {
    auto r = reduce_3sat_to_sandwich_c4_comp(dup);
    r.instance = reduce_c4comp_to_house_comp(r.instance);
    return {std::move(r), named_pattern("house")};
  }
  throw PreconditionError("unknown reduction target " + target);
}

}  // namespace

VerificationReport verify_sat_equivalence(const CnfFormula& f, const std::string& target,
                                          const std::optional<Pattern>& h,
                                          const VerifyOptions& opts) {
  VerificationReport r;
  r.check = "equivalence:" + target;
  r.digest = digest(render_dimacs(f) + target + (h ? h->name : ""));
  CnfFormula norm = normalize_3cnf(f);
  if (norm.variable_count > kSatGuard) return skipped(r, "formula exceeds the SAT oracle guard");
  try {
    bool sat = sat_brute_force(norm).has_value();
    auto t = build_target(norm, target, h);
    auto sol = solve_sandwich(t.reduction.instance, t.pattern, opts.search);
    bool valid = !sol || is_h_free(apply(t.reduction.instance.graph, t.reduction.instance.mode, *sol),
                                   t.pattern.graph);
    r.details = "sat=" + yes_no(sat) + " sandwich=" + yes_no(sol.has_value()) +
                " vertices=" + std::to_string(t.reduction.instance.graph.vertex_count()) +
                " free=" + std::to_string(t.reduction.instance.free_elements.size());
    r.verdict = sat == sol.has_value() && valid ? Verdict::pass : Verdict::fail;
    if (!valid) r.details += " invalid-witness";
    if (r.verdict == Verdict::fail) r.witness = one_line(render_dimacs(f));
  } catch (const SearchLimitExceeded& e) {
    return skipped(r, e.what());
  }
  return r;
}

VerificationReport verify_gap(const SandwichInstance& inst, const std::string& lift,
                              const Polynomial& p, const std::optional<Pattern>& h,
                              const VerifyOptions& opts) {
  VerificationReport r;
  r.check = "gap:" + lift;
  r.digest = digest(write_hfi(to_document(inst)) + lift + p.to_string());
  if (inst.free_elements.size() > 64) return skipped(r, "too many free elements");
  try {
    Pattern source;
    LiftResult lifted;
    if (lift == "general-del" || lift == "general-comp") {
      if (!h) throw PreconditionError("lift " + lift + " needs a pattern");
      source = *h;
      lifted = lift == "general-del" ? lift_sandwich_del(inst, *h, p) : lift_sandwich_comp(inst, *h, p);
    } else if (lift == "house-del") {
      source = named_pattern("C4");
      lifted = reduce_c4del_to_house_del(inst, p);
    } else {
      auto family = parse_lift_family(lift);
      source = family_pattern(family);
      lifted = lift_specific(inst, family, p);
    }
    bool yes = solve_sandwich(inst, source, opts.search).has_value();
    std::size_t k = lifted.k;
    std::size_t cap = yes ? k : p(k);
    auto best = solve_min(lifted.instance.graph, lifted.instance.pattern, lifted.instance.mode, {},
                          cap, opts.search);
    bool ok = yes ? best.has_value() : !best.has_value();
    if (best && !is_h_free(apply(lifted.instance.graph, lifted.instance.mode, best->pairs),
                           lifted.instance.pattern.graph))
      ok = false;
    r.details = "source=" + yes_no(yes) + " k=" + std::to_string(k) + " cap=" + std::to_string(cap) +
                " lifted=" + (best ? std::to_string(best->cost) : std::string("none")) +
                " vertices=" + std::to_string(lifted.instance.graph.vertex_count());
    r.verdict = ok ? Verdict::pass : Verdict::fail;
    if (!ok) r.witness = one_line(write_hfi(to_document(inst)));
  } catch (const SearchLimitExceeded& e) {
    return skipped(r, e.what());
  }
  return r;
}

VerificationReport verify_duality(const Graph& g, const Pattern& h, std::size_t k,
                                  const VerifyOptions& opts) {
  VerificationReport r;
  r.check = "duality:" + (h.name.empty() ? std::string("pattern") : h.name);
  BudgetedInstance del{g, Mode::deletion, h, k};
  r.digest = digest(write_hfi(to_document(del)));
  if (g.vertex_count() > 7 || k > 3) return skipped(r, "graph or budget beyond desk scale");
  try {
    auto comp = complement_instance(del);
    bool left = solve_budgeted(del, opts.search).has_value();
    bool right = solve_budgeted(comp, opts.search).has_value();
    r.details = "k=" + std::to_string(k) + " deletion=" + yes_no(left) +
                " completion=" + yes_no(right);
    r.verdict = left == right ? Verdict::pass : Verdict::fail;
    if (left != right) r.witness = one_line(write_hfi(to_document(del)));
  } catch (const SearchLimitExceeded& e) {
    return skipped(r, e.what());
  }
  return r;
}

VerificationReport verify_opt_scaling(const MinOnesInstance& inst, std::size_t n,
                                      std::optional<std::size_t> group_size,
                                      const VerifyOptions& opts) {
  VerificationReport r;
  r.check = "scaling";
  r.digest = digest(write_minones(inst) + std::to_string(n));
  if (inst.variable_count > kSatGuard) return skipped(r, "instance exceeds the MinOnes oracle guard");
  try {
    auto q = reduce_minones_to_quarantined(inst, n, HornOptions{group_size});
    std::size_t delta = q.groups.group_size;
    auto ones = minones_brute_force(inst);
    auto graph = solve_min(q.graph, named_pattern("K" + std::to_string(n) + "-e"), Mode::deletion,
                           q.quarantine, std::nullopt, opts.search);
    bool ok = ones.has_value() == graph.has_value();
    if (ok && ones) {
      ok = graph->cost == delta * ones->ones;
      auto back = graph_solution_to_assignment(q.groups, graph->pairs);
      for (const auto& c : inst.constraints) ok = ok && eval_constraint(c, back);
    }
    r.details = "delta=" + std::to_string(delta) +
                " minones=" + (ones ? std::to_string(ones->ones) : std::string("none")) +
                " graph=" + (graph ? std::to_string(graph->cost) : std::string("none"));
    r.verdict = ok ? Verdict::pass : Verdict::fail;
    if (!ok) r.witness = one_line(write_minones(inst));
  } catch (const SearchLimitExceeded& e) {
    return skipped(r, e.what());
  }
  return r;
}

std::vector<VerificationReport> verify_gadgets() {
  std::vector<VerificationReport> out;
  for (const auto& c : shipped_contracts()) {
    VerificationReport r;
    std::string name = c.gadget.name;
    for (char& ch : name)
      if (ch == ' ') ch = '-';
    r.check = "gadget:" + name;
    r.digest = digest(write_hfi(to_document(c.gadget.instance)));
    auto res = check_contract(c);
    r.verdict = res.holds ? Verdict::pass : Verdict::fail;
    r.details = "solutions=" + std::to_string(res.solutions);
    if (!res.holds) r.witness = res.detail;
    out.push_back(r);
  }
  return out;
}

}  // namespace hfree
