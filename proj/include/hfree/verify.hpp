#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hfree/cnf.hpp"
#include "hfree/minhorn.hpp"
#include "hfree/pattern.hpp"
#include "hfree/reduce_general.hpp"
#include "hfree/solver.hpp"

namespace hfree {

enum class Verdict { pass, fail, skipped };
std::string_view to_string(Verdict v);

struct VerificationReport {
  std::string check;
  std::string digest;
  Verdict verdict = Verdict::skipped;
  std::string details;
  std::string witness;  // set on failure

  // "RESULT <verdict> <check> <detail>"
  std::string machine_line() const;
  std::string prose() const;
};

struct VerifyOptions {
  SearchOptions search;
};

// target: general-del, general-comp, c4-del, c5-del, c4-comp,
// house-comp-via-c4. The general targets need a pattern.
VerificationReport verify_sat_equivalence(const CnfFormula& f, const std::string& target,
                                          const std::optional<Pattern>& h,
                                          const VerifyOptions& opts = {});

// lift: general-del, general-comp (need a pattern), c4-del, c5-del,
// c4-comp, house-comp, house-del.
VerificationReport verify_gap(const SandwichInstance& inst, const std::string& lift,
                              const Polynomial& p, const std::optional<Pattern>& h = {},
                              const VerifyOptions& opts = {});

VerificationReport verify_duality(const Graph& g, const Pattern& h, std::size_t k,
                                  const VerifyOptions& opts = {});

VerificationReport verify_opt_scaling(const MinOnesInstance& inst, std::size_t n,
                                      std::optional<std::size_t> group_size = std::nullopt,
                                      const VerifyOptions& opts = {});

std::vector<VerificationReport> verify_gadgets();

}  // namespace hfree
