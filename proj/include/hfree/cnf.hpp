#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hfree {

struct Literal {
  std::uint32_t var = 0;
  bool positive = true;
  auto operator<=>(const Literal&) const = default;
};

using Clause = std::vector<Literal>;
using Assignment = std::vector<bool>;

struct CnfFormula {
  std::size_t variable_count = 0;
  std::vector<Clause> clauses;
  bool operator==(const CnfFormula&) const = default;
};

CnfFormula parse_dimacs(std::string_view text);
std::string render_dimacs(const CnfFormula& f);

// Exactly three literals over three distinct variables per clause, using
// fresh variables for padding. Tautologies are dropped.
CnfFormula normalize_3cnf(const CnfFormula& f);
bool is_exact_3cnf(const CnfFormula& f);

std::vector<std::size_t> occurrence_counts(const CnfFormula& f);
CnfFormula duplicate_for_min_occurrences(const CnfFormula& f, std::size_t min_occ);

bool satisfies(const CnfFormula& f, const Assignment& a);

inline constexpr std::size_t kSatGuard = 24;
// Exhaustive search; throws GuardExceeded above kSatGuard variables.
std::optional<Assignment> sat_brute_force(const CnfFormula& f);

}  // namespace hfree
