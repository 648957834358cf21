#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hfree/cnf.hpp"
#include "hfree/reduce_general.hpp"
#include "hfree/solver.hpp"

namespace hfree {

enum class ConstraintKind { f1, f2, fn, gn };

struct Constraint {
  ConstraintKind kind = ConstraintKind::f1;
  std::size_t n = 0;  // clique size for fn / gn
  std::vector<std::size_t> args;
  bool operator==(const Constraint&) const = default;
};

struct MinOnesInstance {
  std::size_t variable_count = 0;
  std::vector<Constraint> constraints;
  bool operator==(const MinOnesInstance&) const = default;
};

std::size_t expected_arity(const Constraint& c);

// Throws PreconditionError on arity mismatch or out-of-range arguments.
bool eval_constraint(const Constraint& c, const Assignment& a);

struct MinOnesSolution {
  Assignment assignment;
  std::size_t ones = 0;
};

// Exhaustive; throws GuardExceeded above kSatGuard variables.
std::optional<MinOnesSolution> minones_brute_force(const MinOnesInstance& inst);

struct EdgeGroupMap {
  std::vector<std::vector<VertexPair>> groups;  // per source variable, sorted
  std::size_t group_size = 0;
};

struct QuarantinedInstance {
  Graph graph;
  PairSet quarantine;
  EdgeGroupMap groups;
  std::map<std::string, VertexPair> labels;
  std::size_t n = 0;  // clique size
};

struct HornOptions {
  // Replace the uniform group size 9 n_vars^2 + 2 by a smaller value.
  // Not faithful to the construction's cost accounting; for desk checks.
  std::optional<std::size_t> group_size;
};

std::size_t horn_group_size(std::size_t variable_count);

// Smallest uniform group size the construction can realise for `inst`.
std::size_t min_feasible_group_size(const MinOnesInstance& inst);

QuarantinedInstance reduce_minones_to_quarantined(const MinOnesInstance& inst, std::size_t n,
                                                  const HornOptions& opts = {});

// Deletion lift with pattern K_n - e and m^2 pendant copies (m = |E|),
// unless `copies` overrides the count. Budget is set to the copy count.
LiftResult lift_quarantine(const Graph& g, const PairSet& quarantine, std::size_t n,
                           std::optional<std::size_t> copies = std::nullopt);

struct EdgeIndexedInstance {
  MinOnesInstance instance;
  std::vector<VertexPair> edge_vars;  // variable i is edge_vars[i]
};

EdgeIndexedInstance reduce_knexdel_to_minones(const Graph& g, std::size_t n);

// Solution transfer for the quarantined construction. A variable is one
// iff its whole group is deleted; partial groups throw PreconditionError.
Assignment graph_solution_to_assignment(const EdgeGroupMap& groups, const ModificationSet& f);
ModificationSet assignment_to_graph_solution(const EdgeGroupMap& groups, const Assignment& a);

// Indicator correspondence for the edge-indexed instance.
Assignment edges_to_assignment(const std::vector<VertexPair>& edge_vars, const ModificationSet& f);
ModificationSet assignment_to_edges(const std::vector<VertexPair>& edge_vars, const Assignment& a);

}  // namespace hfree
