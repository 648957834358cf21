#include "hfree/solver.hpp"

#include <algorithm>
#include <limits>

#include "hfree/error.hpp"

namespace hfree {

std::string_view to_string(Mode m) {
  return m == Mode::deletion ? "deletion" : "completion";
}

Mode flip(Mode m) { return m == Mode::deletion ? Mode::completion : Mode::deletion; }

namespace {

std::string pair_text(VertexPair e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

bool valid_pair(const Graph& g, VertexPair e) {
  return e.u != e.v && e.v < g.vertex_count();
}

}  // namespace

void SandwichInstance::validate() const {
  for (const auto& e : free_elements) {
    if (!valid_pair(graph, e)) throw PreconditionError("invalid pair " + pair_text(e));
    if (mode == Mode::deletion && !graph.has_edge(e))
      throw PreconditionError("deletable pair " + pair_text(e) + " is not an edge");
    if (mode == Mode::completion && graph.has_edge(e))
      throw PreconditionError("fillable pair " + pair_text(e) + " is an edge");
  }
  for (const auto& [name, e] : labels) {
    if (!valid_pair(graph, e)) throw PreconditionError("label " + name + " has invalid pair");
    if (mode == Mode::deletion && !graph.has_edge(e))
      throw PreconditionError("label " + name + " is not an edge");
    if (mode == Mode::completion && !free_elements.count(e))
      throw PreconditionError("label " + name + " is not a fillable non-edge");
  }
}

Graph apply(const Graph& g, Mode mode, const ModificationSet& f) {
  Graph out = g;
  for (const auto& e : f) {
    if (!valid_pair(g, e)) throw PreconditionError("invalid pair " + pair_text(e));
    if (mode == Mode::deletion) {
      if (!out.remove_edge(e))
        throw PreconditionError("cannot delete non-edge " + pair_text(e));
    } else if (!out.add_edge(e)) {
      throw PreconditionError("cannot fill edge " + pair_text(e));
    }
  }
  return out;
}

namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

// Which pairs the search may touch: either an allow list or everything
// outside a deny list.
struct Modifiable {
  const PairSet* allow = nullptr;
  const PairSet* deny = nullptr;
  bool operator()(VertexPair e) const {
    return allow ? allow->count(e) > 0 : deny->count(e) == 0;
  }
};

// Branches on the options of one live induced copy at a time. Branch i
// forbids options 1..i-1, so every modification set is reached at most once.
class Search {
 public:
  Search(const Graph& g, const Pattern& h, Mode mode, Modifiable mod,
         const SearchOptions& opts)
      : g_(g), matcher_(h.graph), mode_(mode), mod_(mod), opts_(opts) {
    root_ = matcher_.copies(g_);
  }

  bool run(std::size_t budget) {
    found_.clear();
    auto live = root_;
    return dfs(live, budget);
  }

  const ModificationSet& solution() const { return found_; }

  std::size_t root_lower_bound() {
    auto opts = options_of(root_);
    return packing_bound(opts, kUnbounded);
  }

 private:
  using Copy = std::vector<Vertex>;

  std::vector<VertexPair> options(const Copy& s) const {
    std::vector<VertexPair> out;
    bool want_edge = mode_ == Mode::deletion;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        VertexPair e(s[i], s[j]);
        if (g_.has_edge(e) == want_edge && mod_(e) && !forbidden_.count(e))
          out.push_back(e);
      }
    return out;
  }

  std::vector<std::vector<VertexPair>> options_of(const std::vector<Copy>& live) const {
    std::vector<std::vector<VertexPair>> out;
    out.reserve(live.size());
    for (const auto& s : live) out.push_back(options(s));
    return out;
  }

  // Greedy packing of copies with pairwise disjoint options; each needs
  // its own modification. Stops counting once past `stop`.
  static std::size_t packing_bound(std::vector<std::vector<VertexPair>> opts,
                                   std::size_t stop) {
    std::sort(opts.begin(), opts.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    PairSet used;
    std::size_t count = 0;
    for (const auto& o : opts) {
      bool clash = false;
      for (const auto& e : o)
        if (used.count(e)) {
          clash = true;
          break;
        }
      if (clash) continue;
      used.insert(o.begin(), o.end());
      if (++count > stop) break;
    }
    return count;
  }

  void modify(VertexPair e) {
    if (mode_ == Mode::deletion)
      g_.remove_edge(e);
    else
      g_.add_edge(e);
  }

  void unmodify(VertexPair e) {
    if (mode_ == Mode::deletion)
      g_.add_edge(e);
    else
      g_.remove_edge(e);
  }

  bool dfs(const std::vector<Copy>& live, std::size_t remaining) {
    if (++nodes_ > opts_.node_limit)
      throw SearchLimitExceeded("search exceeded node limit of " +
                                std::to_string(opts_.node_limit));
    if (live.empty()) {
      found_ = applied_;
      std::sort(found_.begin(), found_.end());
      return true;
    }
    if (remaining == 0) return false;
    auto opts = options_of(live);
    std::size_t pick = 0;
    for (std::size_t i = 1; i < opts.size(); ++i)
      if (opts[i].size() < opts[pick].size()) pick = i;
    if (opts[pick].empty()) return false;
    if (remaining != kUnbounded && opts[pick].size() > 1 &&
        packing_bound(opts, remaining) > remaining)
      return false;

    std::vector<VertexPair> branch = opts[pick];
    bool ok = false;
    std::size_t forbidden_added = 0;
    for (const auto& e : branch) {
      modify(e);
      applied_.push_back(e);
      std::vector<Copy> next;
      next.reserve(live.size());
      for (const auto& s : live)
        if (!(std::binary_search(s.begin(), s.end(), e.u) &&
              std::binary_search(s.begin(), s.end(), e.v)))
          next.push_back(s);
      for (auto& s : matcher_.copies_through(g_, e.u, e.v)) next.push_back(std::move(s));
      ok = dfs(next, remaining == kUnbounded ? kUnbounded : remaining - 1);
      applied_.pop_back();
      unmodify(e);
      if (ok) break;
      forbidden_.insert(e);
      ++forbidden_added;
    }
    for (std::size_t i = 0; i < forbidden_added; ++i) forbidden_.erase(branch[i]);
    return ok;
  }

  Graph g_;
  InducedMatcher matcher_;
  Mode mode_;
  Modifiable mod_;
  SearchOptions opts_;
  std::vector<Copy> root_;
  PairSet forbidden_;
  std::vector<VertexPair> applied_;
  ModificationSet found_;
  std::uint64_t nodes_ = 0;
};

std::optional<MinSolution> minimize(Search& s, std::optional<std::size_t> cap) {
  std::size_t lb = s.root_lower_bound();
  if (cap) {
    for (std::size_t d = lb; d <= *cap; ++d)
      if (s.run(d)) return MinSolution{s.solution(), s.solution().size()};
    return std::nullopt;
  }
  if (!s.run(kUnbounded)) return std::nullopt;
  MinSolution best{s.solution(), s.solution().size()};
  for (std::size_t d = lb; d < best.cost; ++d)
    if (s.run(d)) return MinSolution{s.solution(), s.solution().size()};
  return best;
}

}  // namespace

std::optional<ModificationSet> solve_sandwich(const SandwichInstance& inst,
                                              const Pattern& h,
                                              const SearchOptions& opts) {
  inst.validate();
  Search s(inst.graph, h, inst.mode, Modifiable{&inst.free_elements, nullptr}, opts);
  if (!s.run(kUnbounded)) return std::nullopt;
  return s.solution();
}

std::optional<MinSolution> solve_min(const Graph& g, const Pattern& h, Mode mode,
                                     const PairSet& quarantine,
                                     std::optional<std::size_t> budget_cap,
                                     const SearchOptions& opts) {
  Search s(g, h, mode, Modifiable{nullptr, &quarantine}, opts);
  return minimize(s, budget_cap);
}

std::optional<MinSolution> solve_min(const SandwichInstance& inst, const Pattern& h,
                                     std::optional<std::size_t> budget_cap,
                                     const SearchOptions& opts) {
  inst.validate();
  Search s(inst.graph, h, inst.mode, Modifiable{&inst.free_elements, nullptr}, opts);
  return minimize(s, budget_cap);
}

std::optional<MinSolution> solve_budgeted(const BudgetedInstance& inst,
                                          const SearchOptions& opts) {
  PairSet none;
  return solve_min(inst.graph, inst.pattern, inst.mode, none, inst.budget, opts);
}

}  // namespace hfree
