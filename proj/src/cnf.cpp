#include "hfree/cnf.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hfree/error.hpp"

namespace hfree {

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  CnfFormula f;
  Clause current;
  std::size_t clause_line = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "p") {
      std::string kind;
      long long v = -1, c = -1;
      std::string extra;
      if (have_header) throw ParseError(lineno, "duplicate header");
      if (!(ls >> kind >> v >> c) || kind != "cnf" || v < 0 || c < 0 || (ls >> extra))
        throw ParseError(lineno, "malformed header");
      f.variable_count = static_cast<std::size_t>(v);
      declared_clauses = static_cast<std::size_t>(c);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "clause before header");
    ls.clear();
    ls.seekg(0);
    std::string tok;
    while (ls >> tok) {
      long long lit = 0;
      std::size_t used = 0;
      try {
        lit = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError(lineno, "bad literal '" + tok + "'");
      if (lit == 0) {
        if (current.empty()) throw ParseError(lineno, "empty clause");
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      if (var > f.variable_count)
        throw ParseError(lineno, "variable " + std::to_string(var) + " out of range");
      if (current.empty()) clause_line = lineno;
      current.push_back({static_cast<std::uint32_t>(var - 1), lit > 0});
    }
  }
  if (!have_header) throw ParseError(lineno, "missing header");
  if (!current.empty()) throw ParseError(clause_line, "unterminated clause");
  if (f.clauses.size() != declared_clauses)
    throw ParseError(lineno, "header declares " + std::to_string(declared_clauses) +
                                 " clauses, found " + std::to_string(f.clauses.size()));
  return f;
}

std::string render_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (const auto& l : c) out << (l.positive ? "" : "-") << l.var + 1 << ' ';
    out << "0\n";
  }
  return out.str();
}

bool is_exact_3cnf(const CnfFormula& f) {
  for (const auto& c : f.clauses) {
    if (c.size() != 3) return false;
    if (c[0].var == c[1].var || c[0].var == c[2].var || c[1].var == c[2].var)
      return false;
    for (const auto& l : c)
      if (l.var >= f.variable_count) return false;
  }
  return true;
}

CnfFormula normalize_3cnf(const CnfFormula& f) {
  if (is_exact_3cnf(f)) return f;
  CnfFormula out;
  out.variable_count = f.variable_count;
  auto fresh = [&]() { return static_cast<std::uint32_t>(out.variable_count++); };
  for (const auto& c : f.clauses) {
    Clause lits;
    bool tautology = false;
    for (const auto& l : c) {
      if (l.var >= f.variable_count)
        throw PreconditionError("literal variable out of range");
      if (std::find(lits.begin(), lits.end(), l) != lits.end()) continue;
      if (std::find(lits.begin(), lits.end(), Literal{l.var, !l.positive}) != lits.end())
        tautology = true;
      lits.push_back(l);
    }
    if (tautology) continue;
    if (lits.size() > 3)
      throw PreconditionError("clause over more than 3 distinct variables");
    // Pad with every sign pattern of the fresh variables.
    std::size_t pad = 3 - lits.size();
    std::vector<std::uint32_t> extra;
    for (std::size_t i = 0; i < pad; ++i) extra.push_back(fresh());
    for (std::size_t mask = 0; mask < (std::size_t{1} << pad); ++mask) {
      Clause padded = lits;
      for (std::size_t i = 0; i < pad; ++i)
        padded.push_back({extra[i], ((mask >> (pad - 1 - i)) & 1) == 0});
      out.clauses.push_back(std::move(padded));
    }
  }
  return out;
}

std::vector<std::size_t> occurrence_counts(const CnfFormula& f) {
  std::vector<std::size_t> occ(f.variable_count, 0);
  for (const auto& c : f.clauses)
    for (const auto& l : c) ++occ.at(l.var);
  return occ;
}

CnfFormula duplicate_for_min_occurrences(const CnfFormula& f, std::size_t min_occ) {
  std::size_t least = 0;
  for (std::size_t k : occurrence_counts(f))
    if (k > 0 && (least == 0 || k < least)) least = k;
  if (least == 0 || least >= min_occ) return f;
  std::size_t copies = (min_occ + least - 1) / least;
  CnfFormula out;
  out.variable_count = f.variable_count;
  for (std::size_t r = 0; r < copies; ++r)
    out.clauses.insert(out.clauses.end(), f.clauses.begin(), f.clauses.end());
  return out;
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
  if (a.size() != f.variable_count) return false;
  for (const auto& c : f.clauses) {
    bool sat = false;
    for (const auto& l : c)
      if (a[l.var] == l.positive) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  return true;
}

std::optional<Assignment> sat_brute_force(const CnfFormula& f) {
  std::size_t n = f.variable_count;
  if (n > kSatGuard)
    throw GuardExceeded("sat_brute_force: " + std::to_string(n) +
                        " variables exceeds guard " + std::to_string(kSatGuard));
  // Clauses as (positive mask, negative mask) over the assignment bits.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;
  for (const auto& c : f.clauses) {
    std::uint32_t pos = 0, neg = 0;
    for (const auto& l : c) (l.positive ? pos : neg) |= std::uint32_t{1} << l.var;
    masks.emplace_back(pos, neg);
  }
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
    bool ok = true;
    for (auto [pos, neg] : masks)
      if (!(bits & pos) && !(~bits & neg)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    Assignment a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = (bits >> i) & 1;
    return a;
  }
  return std::nullopt;
}

}  // namespace hfree
