#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfree/graph.hpp"
#include "hfree/pattern.hpp"

namespace hfree {

enum class Mode { deletion, completion };

std::string_view to_string(Mode m);
Mode flip(Mode m);

// Sorted, duplicate-free list of pairs.
using ModificationSet = std::vector<VertexPair>;

struct SandwichInstance {
  Graph graph;
  Mode mode = Mode::deletion;
  PairSet free_elements;
  std::map<std::string, VertexPair> labels;

  // Throws PreconditionError when free elements or labels do not fit the mode.
  void validate() const;
};

struct BudgetedInstance {
  Graph graph;
  Mode mode = Mode::deletion;
  Pattern pattern;
  std::size_t budget = 0;
};

struct SearchOptions {
  std::uint64_t node_limit = 10'000'000;
};

struct MinSolution {
  ModificationSet pairs;
  std::size_t cost = 0;
};

Graph apply(const Graph& g, Mode mode, const ModificationSet& f);

std::optional<ModificationSet> solve_sandwich(const SandwichInstance& inst,
                                              const Pattern& h,
                                              const SearchOptions& opts = {});

// Minimum solution avoiding `quarantine` (the non-modifiable elements).
std::optional<MinSolution> solve_min(const Graph& g, const Pattern& h, Mode mode,
                                     const PairSet& quarantine,
                                     std::optional<std::size_t> budget_cap,
                                     const SearchOptions& opts = {});

// Minimum solution using only the instance's free elements.
std::optional<MinSolution> solve_min(const SandwichInstance& inst, const Pattern& h,
                                     std::optional<std::size_t> budget_cap,
                                     const SearchOptions& opts = {});

// solve_min with the instance budget as cap.
std::optional<MinSolution> solve_budgeted(const BudgetedInstance& inst,
                                          const SearchOptions& opts = {});

}  // namespace hfree
