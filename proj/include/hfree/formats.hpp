#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "hfree/minhorn.hpp"
#include "hfree/solver.hpp"

namespace hfree {

// Line-based instance file ("hfi 1"). A document with a budget is a
// budgeted instance and carries no free marks.
struct HfiDocument {
  Mode mode = Mode::deletion;
  std::optional<std::string> pattern;
  Graph graph;
  PairSet free_elements;
  std::optional<std::size_t> budget;
  std::map<std::string, VertexPair> labels;
  bool operator==(const HfiDocument&) const = default;
};

HfiDocument parse_hfi(std::string_view text);
std::string write_hfi(const HfiDocument& doc);

HfiDocument to_document(const SandwichInstance& inst, std::optional<std::string> pattern = {});
HfiDocument to_document(const BudgetedInstance& inst);
SandwichInstance to_sandwich(const HfiDocument& doc);
// Needs a pattern line and a budget line.
BudgetedInstance to_budgeted(const HfiDocument& doc);

MinOnesInstance parse_minones(std::string_view text);
std::string write_minones(const MinOnesInstance& inst);

// 64-bit FNV-1a of the text, as 16 hex digits.
std::string digest(std::string_view text);

}  // namespace hfree
