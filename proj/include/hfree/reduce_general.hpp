#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hfree/cnf.hpp"
#include "hfree/pattern.hpp"
#include "hfree/solver.hpp"

namespace hfree {

// p(l) = a * l^d + c
struct Polynomial {
  std::uint64_t a = 1;
  std::uint64_t d = 1;
  std::uint64_t c = 0;

  std::uint64_t operator()(std::uint64_t l) const;
  // "a,d,c"
  static Polynomial parse(std::string_view text);
  std::string to_string() const;
};

struct ReductionTrace {
  // (clause, position) -> the clause gadget's literal pair
  std::map<std::pair<std::size_t, std::size_t>, VertexPair> clause_literals;
  // (variable, polarity) -> the variable gadget's literal pair
  std::map<std::pair<std::size_t, bool>, VertexPair> variable_literals;
  // (clause, position) -> labelled pairs along the connector chain, from
  // the clause end to the variable end (only for chained reductions)
  std::map<std::pair<std::size_t, std::size_t>, std::vector<VertexPair>> chains;
  // gadget id -> its vertices, sorted
  std::map<std::string, std::vector<Vertex>> gadget_extents;
};

struct Reduction {
  SandwichInstance instance;
  ReductionTrace trace;
};

struct LiftResult {
  BudgetedInstance instance;
  std::size_t k = 0;
  std::size_t copies = 0;       // pendant gadgets per quarantined element
  std::size_t quarantined = 0;  // number of quarantined elements
};

Reduction reduce_3sat_to_sandwich_del(const CnfFormula& f, const Pattern& h);
Reduction reduce_3sat_to_sandwich_comp(const CnfFormula& f, const Pattern& h);

LiftResult lift_sandwich_del(const SandwichInstance& inst, const Pattern& h,
                             const Polynomial& p);
LiftResult lift_sandwich_comp(const SandwichInstance& inst, const Pattern& h,
                              const Polynomial& p);

// Deletion lift with an explicit number of pendant copies per undeletable
// edge; the budget is left at |free|.
LiftResult lift_deletion_with_copies(const SandwichInstance& inst, const Pattern& h,
                                     std::size_t copies);

BudgetedInstance complement_instance(const BudgetedInstance& inst);

}  // namespace hfree
