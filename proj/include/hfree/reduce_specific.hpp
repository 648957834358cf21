#pragma once

#include <string>
#include <vector>

#include "hfree/cnf.hpp"
#include "hfree/pattern.hpp"
#include "hfree/reduce_general.hpp"
#include "hfree/solver.hpp"

namespace hfree {

// A stand-alone gadget with its obstruction. Variable gadgets label
// "top" = u_T v_T and "bottom" = u_F v_F; clause gadgets label the
// literal pairs "l1", "l2", "l3".
struct Gadget {
  std::string name;
  SandwichInstance instance;
  Pattern pattern;
};

Gadget c4_del_variable_gadget();
Gadget c4_del_clause_gadget();
Gadget c5_del_variable_gadget();
Gadget c5_del_clause_gadget();
Gadget c4_comp_variable_gadget(std::size_t occurrences);
Gadget c4_comp_clause_gadget();

struct SolutionFact {
  enum class Kind {
    // exactly two solutions, one with `pairs[0]` and not `pairs[1]`, the
    // other the converse
    two_solutions,
    // no solution contains all of `pairs`
    never_all,
    // for each i some solution contains every pair but pairs[i]
    each_omits_one,
    // no solution avoids all of `pairs`
    never_none,
    // for each i some solution contains pairs[i] and no other of `pairs`
    each_only_one,
  };
  Kind kind;
  std::vector<VertexPair> pairs;
};

struct GadgetContract {
  Gadget gadget;
  std::vector<SolutionFact> facts;
  // free elements must span a graph without C4 subgraphs
  bool free_part_c4_free = false;
};

struct ContractResult {
  std::string name;
  bool holds = false;
  std::string detail;
  std::size_t solutions = 0;
};

// Every subset of the free elements that leaves the gadget H-free.
// Throws GuardExceeded above 20 free elements.
std::vector<ModificationSet> enumerate_solutions(const SandwichInstance& inst,
                                                 const Pattern& h);

ContractResult check_contract(const GadgetContract& c);

// The contracts of every shipped gadget (ladder with two occurrences).
std::vector<GadgetContract> shipped_contracts();

Reduction reduce_3sat_to_sandwich_c4_del(const CnfFormula& f);
Reduction reduce_3sat_to_sandwich_c5_del(const CnfFormula& f);
Reduction reduce_3sat_to_sandwich_c4_comp(const CnfFormula& f);

SandwichInstance reduce_c4comp_to_house_comp(const SandwichInstance& inst);

enum class LiftFamily { c4_del, c5_del, c4_comp, house_comp };
LiftFamily parse_lift_family(const std::string& name);
std::string to_string(LiftFamily f);
Pattern family_pattern(LiftFamily f);

LiftResult lift_specific(const SandwichInstance& inst, LiftFamily family,
                         const Polynomial& p);
LiftResult reduce_c4del_to_house_del(const SandwichInstance& inst, const Polynomial& p);

// Whether the free elements, read as edges, contain a 4-cycle.
bool free_part_has_c4(const SandwichInstance& inst);

}  // namespace hfree
