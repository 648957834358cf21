#include "hfree/formats.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

#include "hfree/error.hpp"

namespace hfree {

namespace {

struct Lines {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
};

// Splits into whitespace tokens, dropping blank and "c" comment lines.
Lines tokenize(std::string_view text) {
  Lines out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty() || toks[0] == "c") continue;
    out.rows.emplace_back(no, std::move(toks));
  }
  return out;
}

std::size_t number(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.size() > 9 || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, "expected a nonnegative integer, got '" + tok + "'");
  return std::stoul(tok);
}

VertexPair pair_at(const std::vector<std::string>& toks, std::size_t i, std::size_t n,
                   std::size_t line) {
  std::size_t a = number(toks.at(i), line), b = number(toks.at(i + 1), line);
  if (a == b) throw ParseError(line, "self-loop");
  if (a >= n || b >= n) throw ParseError(line, "vertex out of range");
  return {static_cast<Vertex>(a), static_cast<Vertex>(b)};
}

}  // namespace

HfiDocument parse_hfi(std::string_view text) {
  auto lines = tokenize(text);
  auto& rows = lines.rows;
  std::size_t i = 0;
  auto expect = [&](const char* key, std::size_t arity) -> const std::vector<std::string>& {
    if (i >= rows.size()) throw ParseError(rows.empty() ? 0 : rows.back().first, std::string("missing '") + key + "' line");
    const auto& [no, toks] = rows[i];
    if (toks[0] != key || toks.size() != arity + 1)
      throw ParseError(no, std::string("expected '") + key + "' line");
    ++i;
    return toks;
  };
  HfiDocument doc;
  const auto& magic = expect("hfi", 1);
  if (magic[1] != "1") throw ParseError(rows[0].first, "unsupported hfi version " + magic[1]);
  const auto& mode = expect("mode", 1);
  if (mode[1] == "deletion")
    doc.mode = Mode::deletion;
  else if (mode[1] == "completion")
    doc.mode = Mode::completion;
  else
    throw ParseError(rows[i - 1].first, "unknown mode " + mode[1]);
  if (i < rows.size() && rows[i].second[0] == "pattern") doc.pattern = expect("pattern", 1)[1];
  std::size_t n = number(expect("vertices", 1)[1], rows[i - 1].first);
  doc.graph = Graph(n);
  PairSet seen;
  for (; i < rows.size(); ++i) {
    const auto& [no, t] = rows[i];
    const std::string& key = t[0];
    if (key == "edge") {
      if (t.size() != 3 && !(t.size() == 4 && t[3] == "free"))
        throw ParseError(no, "expected 'edge u v [free]'");
      VertexPair e = pair_at(t, 1, n, no);
      if (!seen.insert(e).second) throw ParseError(no, "pair listed twice");
      doc.graph.add_edge(e);
      if (t.size() == 4) {
        if (doc.mode != Mode::deletion) throw ParseError(no, "free edge in completion mode");
        doc.free_elements.insert(e);
      }
    } else if (key == "nonedge") {
      if (t.size() != 4 || t[3] != "free") throw ParseError(no, "expected 'nonedge u v free'");
      if (doc.mode != Mode::completion) throw ParseError(no, "nonedge line in deletion mode");
      VertexPair e = pair_at(t, 1, n, no);
      if (!seen.insert(e).second) throw ParseError(no, "pair listed twice");
      doc.free_elements.insert(e);
    } else if (key == "budget") {
      if (t.size() != 2 || doc.budget) throw ParseError(no, "expected one 'budget k' line");
      doc.budget = number(t[1], no);
    } else if (key == "label") {
      if (t.size() != 4) throw ParseError(no, "expected 'label name u v'");
      if (!doc.labels.emplace(t[1], pair_at(t, 2, n, no)).second)
        throw ParseError(no, "duplicate label " + t[1]);
    } else {
      throw ParseError(no, "unknown line '" + key + "'");
    }
  }
  if (doc.budget && !doc.free_elements.empty())
    throw ParseError(0, "budgeted instances cannot mark free elements");
  if (doc.mode == Mode::completion)
    for (const auto& e : doc.free_elements)
      if (doc.graph.has_edge(e)) throw ParseError(0, "fillable pair is also an edge");
  return doc;
}

std::string write_hfi(const HfiDocument& doc) {
  std::ostringstream out;
  out << "hfi 1\nmode " << to_string(doc.mode) << '\n';
  if (doc.pattern) out << "pattern " << *doc.pattern << '\n';
  out << "vertices " << doc.graph.vertex_count() << '\n';
  for (const auto& e : doc.graph.edges()) {
    out << "edge " << e.u << ' ' << e.v;
    if (doc.mode == Mode::deletion && doc.free_elements.count(e)) out << " free";
    out << '\n';
  }
  if (doc.mode == Mode::completion)
    for (const auto& e : doc.free_elements) out << "nonedge " << e.u << ' ' << e.v << " free\n";
  if (doc.budget) out << "budget " << *doc.budget << '\n';
  for (const auto& [name, e] : doc.labels) out << "label " << name << ' ' << e.u << ' ' << e.v << '\n';
  return out.str();
}

HfiDocument to_document(const SandwichInstance& inst, std::optional<std::string> pattern) {
  HfiDocument doc;
  doc.mode = inst.mode;
  doc.pattern = std::move(pattern);
  doc.graph = inst.graph;
  doc.free_elements = inst.free_elements;
  doc.labels = inst.labels;
  return doc;
}

HfiDocument to_document(const BudgetedInstance& inst) {
  HfiDocument doc;
  doc.mode = inst.mode;
  if (!inst.pattern.name.empty()) doc.pattern = inst.pattern.name;
  doc.graph = inst.graph;
  doc.budget = inst.budget;
  return doc;
}

SandwichInstance to_sandwich(const HfiDocument& doc) {
  if (doc.budget) throw PreconditionError("document is a budgeted instance");
  SandwichInstance inst{doc.graph, doc.mode, doc.free_elements, doc.labels};
  inst.validate();
  return inst;
}

BudgetedInstance to_budgeted(const HfiDocument& doc) {
  if (!doc.budget) throw PreconditionError("document has no budget line");
  if (!doc.pattern) throw PreconditionError("budgeted document needs a pattern line");
  return {doc.graph, doc.mode, named_pattern(*doc.pattern), *doc.budget};
}

MinOnesInstance parse_minones(std::string_view text) {
  auto lines = tokenize(text);
  auto& rows = lines.rows;
  if (rows.size() < 2 || rows[0].second != std::vector<std::string>{"minones", "1"})
    throw ParseError(rows.empty() ? 0 : rows[0].first, "expected 'minones 1'");
  if (rows[1].second.size() != 2 || rows[1].second[0] != "nvars")
    throw ParseError(rows[1].first, "expected 'nvars n'");
  MinOnesInstance inst;
  inst.variable_count = number(rows[1].second[1], rows[1].first);
  for (std::size_t i = 2; i < rows.size(); ++i) {
    const auto& [no, t] = rows[i];
    Constraint c;
    std::size_t first = 1;
    if (t[0] == "f1") {
      c.kind = ConstraintKind::f1;
    } else if (t[0] == "f2") {
      c.kind = ConstraintKind::f2;
    } else if (t[0] == "fn" || t[0] == "gn") {
      c.kind = t[0] == "fn" ? ConstraintKind::fn : ConstraintKind::gn;
      if (t.size() < 2) throw ParseError(no, "missing clique size");
      c.n = number(t[1], no);
      if (c.n < 2) throw ParseError(no, "clique size must be at least 2");
      first = 2;
    } else {
      throw ParseError(no, "unknown constraint '" + t[0] + "'");
    }
    for (std::size_t k = first; k < t.size(); ++k) {
      std::size_t x = number(t[k], no);
      if (x >= inst.variable_count) throw ParseError(no, "variable out of range");
      c.args.push_back(x);
    }
    if (c.args.size() != expected_arity(c))
      throw ParseError(no, "expected " + std::to_string(expected_arity(c)) + " arguments");
    inst.constraints.push_back(std::move(c));
  }
  return inst;
}

std::string write_minones(const MinOnesInstance& inst) {
  std::ostringstream out;
  out << "minones 1\nnvars " << inst.variable_count << '\n';
  for (const auto& c : inst.constraints) {
    switch (c.kind) {
      case ConstraintKind::f1: out << "f1"; break;
      case ConstraintKind::f2: out << "f2"; break;
      case ConstraintKind::fn: out << "fn " << c.n; break;
      case ConstraintKind::gn: out << "gn " << c.n; break;
    }
    for (std::size_t x : c.args) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

std::string digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hfree
