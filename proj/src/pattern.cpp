#include "hfree/pattern.hpp"

#include <charconv>

#include "hfree/error.hpp"

namespace hfree {

Pattern make_pattern(Graph g, std::string name) {
  if (g.vertex_count() == 0) throw PreconditionError("pattern needs at least one vertex");
  Pattern h;
  h.name = std::move(name);
  h.p = g.vertex_count();
  h.non_edges = g.non_edges();
  h.three_connected = is_3_connected(g);
  h.graph = std::move(g);
  return h;
}

namespace {

bool parse_size(std::string_view digits, std::size_t& out) {
  if (digits.empty() || digits.size() > 3) return false;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
  return ec == std::errc{} && ptr == digits.data() + digits.size();
}

Graph clique(std::size_t n) {
  Graph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex a = 0; a + 1 < n; ++a) g.add_edge(a, a + 1);
  return g;
}

[[noreturn]] void unknown(std::string_view name) {
  throw PreconditionError("unknown pattern or parameter out of range: " +
                          std::string(name));
}

std::string complement_name(const std::string& name) {
  if (name.empty()) return {};
  if (name == "house") return "P5";
  if (name == "P5") return "house";
  if (name == "C5") return "C5";
  if (name.rfind("co-", 0) == 0) return name.substr(3);
  return "co-" + name;
}

}  // namespace

Pattern named_pattern(std::string_view name) {
  std::string label(name);
  std::size_t n = 0;
  if (name.rfind("co-", 0) == 0) {
    Pattern base = named_pattern(name.substr(3));
    return make_pattern(complement(base.graph), label);
  }
  if (name == "house") return make_pattern(complement(path(5)), label);
  if (name == "octahedron") {
    Graph g = clique(6);
    g.remove_edge(0, 1);
    g.remove_edge(2, 3);
    g.remove_edge(4, 5);
    return make_pattern(std::move(g), label);
  }
  if (name.size() > 2 && name.substr(name.size() - 2) == "-e" && name[0] == 'K') {
    if (!parse_size(name.substr(1, name.size() - 3), n) || n < 2) unknown(name);
    Graph g = clique(n);
    g.remove_edge(0, 1);
    return make_pattern(std::move(g), label);
  }
  if (name.rfind("wheel", 0) == 0) {
    if (!parse_size(name.substr(5), n) || n < 3) unknown(name);
    Graph g(n + 1);
    for (Vertex i = 1; i <= n; ++i) {
      g.add_edge(0, i);
      g.add_edge(i, i == n ? 1 : i + 1);
    }
    return make_pattern(std::move(g), label);
  }
  if (!name.empty() && (name[0] == 'K' || name[0] == 'C' || name[0] == 'P')) {
    if (!parse_size(name.substr(1), n)) unknown(name);
    if (name[0] == 'K' && n >= 2) return make_pattern(clique(n), label);
    if (name[0] == 'P' && n >= 2) return make_pattern(path(n), label);
    if (name[0] == 'C' && n >= 3) {
      Graph g = path(n);
      g.add_edge(0, static_cast<Vertex>(n - 1));
      return make_pattern(std::move(g), label);
    }
  }
  unknown(name);
}

Pattern complement_pattern(const Pattern& h) {
  return make_pattern(complement(h.graph), complement_name(h.name));
}

void require(const Pattern& h, std::initializer_list<Requirement> needs) {
  std::string who = h.name.empty() ? "pattern" : "pattern " + h.name;
  for (const auto& r : needs) {
    switch (r.kind) {
      case Requirement::Kind::three_connected:
        if (!h.three_connected) throw RequirementError(who + " is not 3-connected");
        break;
      case Requirement::Kind::min_non_edges:
        if (h.non_edges.size() < r.count)
          throw RequirementError(who + " needs " + std::to_string(r.count) +
                                 " non-edges, has " +
                                 std::to_string(h.non_edges.size()));
        break;
      case Requirement::Kind::min_edges:
        if (h.graph.edge_count() < r.count)
          throw RequirementError(who + " needs " + std::to_string(r.count) +
                                 " edges, has " +
                                 std::to_string(h.graph.edge_count()));
        break;
    }
  }
}

}  // namespace hfree
