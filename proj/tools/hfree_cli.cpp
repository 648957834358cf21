#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "hfree/error.hpp"
#include "hfree/formats.hpp"
#include "hfree/minhorn.hpp"
#include "hfree/reduce_general.hpp"
#include "hfree/reduce_specific.hpp"
#include "hfree/verify.hpp"

using namespace hfree;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kSkipped = 3 };

struct Common {
  std::string input;
  std::string output;
  std::string pattern;
  std::uint64_t seed = 1;
  std::uint64_t node_limit = SearchOptions{}.node_limit;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  out << text;
}

std::optional<Pattern> pattern_of(const Common& c) {
  if (c.pattern.empty()) return std::nullopt;
  return named_pattern(c.pattern);
}

Pattern need_pattern(const Common& c, const HfiDocument* doc = nullptr) {
  if (!c.pattern.empty()) return named_pattern(c.pattern);
  if (doc && doc->pattern) return named_pattern(*doc->pattern);
  throw PreconditionError("a pattern is required (--pattern)");
}

int report(const VerificationReport& r) {
  std::cout << r.machine_line() << '\n' << r.prose() << '\n';
  switch (r.verdict) {
    case Verdict::pass: return kOk;
    case Verdict::fail: return kFail;
    case Verdict::skipped: return kSkipped;
  }
  return kFail;
}

std::string pairs_text(const ModificationSet& f) {
  std::string s;
  for (const auto& e : f) s += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
  return s;
}

int run_reduce(const std::string& kind, const Common& c, std::size_t n,
               std::optional<std::size_t> group_size, const std::string& poly) {
  std::string text = read_input(c.input);
  if (kind == "sat2del" || kind == "sat2comp" || kind == "c4del" || kind == "c5del" ||
      kind == "c4comp") {
    CnfFormula f = normalize_3cnf(parse_dimacs(text));
    Reduction r;
    std::string pname;
    if (kind == "sat2del" || kind == "sat2comp") {
      Pattern h = need_pattern(c);
      r = kind == "sat2del" ? reduce_3sat_to_sandwich_del(f, h) : reduce_3sat_to_sandwich_comp(f, h);
      pname = h.name;
    } else if (kind == "c4del") {
      r = reduce_3sat_to_sandwich_c4_del(f);
      pname = "C4";
    } else if (kind == "c5del") {
      r = reduce_3sat_to_sandwich_c5_del(f);
      pname = "C5";
    } else {
      r = reduce_3sat_to_sandwich_c4_comp(duplicate_for_min_occurrences(f, 2));
      pname = "C4";
    }
    write_output(c.output, write_hfi(to_document(r.instance, pname)));
    return kOk;
  }
  if (kind == "house-comp") {
    auto inst = to_sandwich(parse_hfi(text));
    write_output(c.output, write_hfi(to_document(reduce_c4comp_to_house_comp(inst), "house")));
    return kOk;
  }
  if (kind == "house-del") {
    auto inst = to_sandwich(parse_hfi(text));
    auto r = reduce_c4del_to_house_del(inst, Polynomial::parse(poly));
    write_output(c.output, write_hfi(to_document(r.instance)));
    return kOk;
  }
  if (kind == "minones2graph") {
    auto q = reduce_minones_to_quarantined(parse_minones(text), n, HornOptions{group_size});
    SandwichInstance inst;
    inst.graph = q.graph;
    inst.mode = Mode::deletion;
    for (const auto& g : q.groups.groups) inst.free_elements.insert(g.begin(), g.end());
    inst.labels = q.labels;
    write_output(c.output, write_hfi(to_document(inst, "K" + std::to_string(n) + "-e")));
    return kOk;
  }
  if (kind == "graph2minones") {
    auto doc = parse_hfi(text);
    write_output(c.output, write_minones(reduce_knexdel_to_minones(doc.graph, n).instance));
    return kOk;
  }
  throw PreconditionError("unknown reduction " + kind);
}

int run_lift(const std::string& family, const Common& c, const std::string& poly, std::size_t n) {
  auto doc = parse_hfi(read_input(c.input));
  auto inst = to_sandwich(doc);
  Polynomial p = Polynomial::parse(poly);
  LiftResult r;
  if (family == "general-del" || family == "general-comp") {
    Pattern h = need_pattern(c, &doc);
    r = family == "general-del" ? lift_sandwich_del(inst, h, p) : lift_sandwich_comp(inst, h, p);
  } else if (family == "house-del") {
    r = reduce_c4del_to_house_del(inst, p);
  } else if (family == "quarantine") {
    PairSet q;
    for (const auto& e : inst.graph.edges())
      if (!inst.free_elements.count(e)) q.insert(e);
    r = lift_quarantine(inst.graph, q, n);
  } else {
    r = lift_specific(inst, parse_lift_family(family), p);
  }
  std::cerr << "k=" << r.k << " copies=" << r.copies << " quarantined=" << r.quarantined << '\n';
  write_output(c.output, write_hfi(to_document(r.instance)));
  return kOk;
}

int run_solve(const Common& c, std::optional<std::size_t> budget, bool existence) {
  auto doc = parse_hfi(read_input(c.input));
  SearchOptions opts{c.node_limit};
  Pattern h = need_pattern(c, &doc);
  std::optional<ModificationSet> found;
  if (doc.budget || (budget && doc.free_elements.empty())) {
    std::size_t cap = budget ? *budget : *doc.budget;
    auto r = solve_min(doc.graph, h, doc.mode, {}, cap, opts);
    if (r) found = r->pairs;
  } else {
    auto inst = to_sandwich(doc);
    if (existence) {
      found = solve_sandwich(inst, h, opts);
    } else {
      auto r = solve_min(inst, h, budget, opts);
      if (r) found = r->pairs;
    }
  }
  if (found) {
    std::cout << "solution cost=" << found->size() << '\n';
    std::cout << "pairs" << pairs_text(*found) << '\n';
  } else {
    std::cout << "no solution\n";
  }
  return kOk;
}

Graph random_small_graph(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t n = 3 + rng() % 5;
  Graph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (rng() & 1) g.add_edge(a, b);
  return g;
}

int run_verify(const std::string& what, const Common& c, const std::string& target,
               const std::string& poly, std::optional<std::size_t> budget, std::size_t n,
               std::optional<std::size_t> group_size) {
  VerifyOptions opts{{c.node_limit}};
  if (what == "gadgets") {
    int code = kOk;
    for (const auto& r : verify_gadgets()) code = std::max(code, report(r));
    return code;
  }
  if (what == "equivalence") {
    if (target.empty()) throw PreconditionError("--target is required");
    return report(verify_sat_equivalence(parse_dimacs(read_input(c.input)), target, pattern_of(c), opts));
  }
  if (what == "gap") {
    if (target.empty()) throw PreconditionError("--family is required");
    auto doc = parse_hfi(read_input(c.input));
    std::optional<Pattern> h = pattern_of(c);
    if (!h && doc.pattern) h = named_pattern(*doc.pattern);
    return report(verify_gap(to_sandwich(doc), target, Polynomial::parse(poly), h, opts));
  }
  if (what == "duality") {
    Graph g = c.input.empty() ? random_small_graph(c.seed) : parse_hfi(read_input(c.input)).graph;
    return report(verify_duality(g, need_pattern(c), budget.value_or(1), opts));
  }
  if (what == "scaling") {
    return report(verify_opt_scaling(parse_minones(read_input(c.input)), n, group_size, opts));
  }
  throw PreconditionError("unknown check " + what);
}

int run_pattern_info(const std::string& name) {
  Pattern h = named_pattern(name);
  std::cout << "name " << h.name << "\np " << h.p << "\nedges";
  for (const auto& e : h.graph.edges()) std::cout << ' ' << e.u << '-' << e.v;
  std::cout << "\nnon_edges";
  for (const auto& e : h.non_edges) std::cout << ' ' << e.u << '-' << e.v;
  std::cout << "\nthree_connected " << (h.three_connected ? "true" : "false") << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reductions and exact solvers for H-free edge modification"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", c.input, "input file (default stdin)");
    sub->add_option("-o,--output", c.output, "output file (default stdout)");
    sub->add_option("--pattern", c.pattern, "forbidden pattern name");
    sub->add_option("--seed", c.seed, "seed for generated inputs");
    sub->add_option("--node-limit", c.node_limit, "search node limit");
  };

  std::string kind, family, poly = "1,1,1", target, what, name;
  std::size_t n = 5;
  std::optional<std::size_t> group_size, budget;
  bool existence = false;
  std::function<int()> action;

  auto* reduce = app.add_subcommand("reduce", "build an instance from a source problem");
  common(reduce);
  reduce->add_option("kind", kind, "reduction")
      ->required()
      ->check(CLI::IsMember({"sat2del", "sat2comp", "c4del", "c5del", "c4comp", "house-comp",
                             "house-del", "minones2graph", "graph2minones"}));
  reduce->add_option("--poly", poly, "polynomial a,d,c for house-del");
  reduce->add_option("--n", n, "clique size for the MinOnes reductions");
  reduce->add_option("--group-size", group_size, "override the uniform group size");
  reduce->callback([&] { action = [&] { return run_reduce(kind, c, n, group_size, poly); }; });

  auto* lift = app.add_subcommand("lift", "turn a sandwich instance into a budgeted one");
  common(lift);
  lift->add_option("--poly", poly, "polynomial a,d,c")->required();
  lift->add_option("--family", family, "lift family")
      ->required()
      ->check(CLI::IsMember({"general-del", "general-comp", "c4-del", "c5-del", "c4-comp",
                             "house-comp", "house-del", "quarantine"}));
  lift->add_option("--n", n, "clique size for the quarantine lift");
  lift->callback([&] { action = [&] { return run_lift(family, c, poly, n); }; });

  auto* comp = app.add_subcommand("complement", "complement a budgeted instance");
  common(comp);
  comp->callback([&] {
    action = [&] {
      auto doc = parse_hfi(read_input(c.input));
      write_output(c.output, write_hfi(to_document(complement_instance(to_budgeted(doc)))));
      return static_cast<int>(kOk);
    };
  });

  auto* solve = app.add_subcommand("solve", "solve an instance exactly");
  common(solve);
  solve->add_option("--budget", budget, "cost cap");
  solve->add_flag("--existence", existence, "sandwich decision instead of optimization");
  solve->callback([&] { action = [&] { return run_solve(c, budget, existence); }; });

  auto* verify = app.add_subcommand("verify", "check a reduction against the oracles");
  common(verify);
  verify->add_option("check", what, "check")
      ->required()
      ->check(CLI::IsMember({"equivalence", "gap", "duality", "scaling", "gadgets"}));
  verify->add_option("--target", target, "reduction target for equivalence");
  verify->add_option("--family", target, "lift family for gap");
  verify->add_option("--poly", poly, "polynomial a,d,c for gap");
  verify->add_option("--budget", budget, "budget for duality");
  verify->add_option("--n", n, "clique size for scaling");
  verify->add_option("--group-size", group_size, "override the uniform group size");
  verify->callback([&] {
    action = [&] { return run_verify(what, c, target, poly, budget, n, group_size); };
  });

  auto* pattern = app.add_subcommand("pattern", "pattern registry");
  pattern->require_subcommand(1);
  auto* info = pattern->add_subcommand("info", "print a named pattern");
  info->add_option("name", name, "pattern name")->required();
  info->callback([&] { action = [&] { return run_pattern_info(name); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const GuardExceeded& e) {
    std::cerr << "skipped: " << e.what() << '\n';
    return kSkipped;
  } catch (const SearchLimitExceeded& e) {
    std::cerr << "skipped: " << e.what() << '\n';
    return kSkipped;
  } catch (const GadgetContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
