#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hfree/graph.hpp"

namespace hfree {

struct Pattern {
  std::string name;  // empty for anonymous patterns
  Graph graph;
  std::size_t p = 0;
  std::vector<VertexPair> non_edges;
  bool three_connected = false;

  // Compares the structural fields only; the name is a display tag.
  bool operator==(const Pattern& o) const {
    return graph == o.graph && p == o.p && non_edges == o.non_edges &&
           three_connected == o.three_connected;
  }
};

Pattern make_pattern(Graph g, std::string name = {});

// K<n>, K<n>-e, C<l>, P<l>, house, wheel<r>, octahedron, and co-<name>
// for the complement of any of these.
Pattern named_pattern(std::string_view name);

// Complement pattern; named X becomes co-X (house and P5 swap, C5 stays).
Pattern complement_pattern(const Pattern& h);

struct Requirement {
  enum class Kind { three_connected, min_non_edges, min_edges };
  Kind kind;
  std::size_t count = 0;

  static Requirement three_connected() { return {Kind::three_connected, 0}; }
  static Requirement min_non_edges(std::size_t q) { return {Kind::min_non_edges, q}; }
  static Requirement min_edges(std::size_t q) { return {Kind::min_edges, q}; }
};

// Throws RequirementError naming the first requirement that fails.
void require(const Pattern& h, std::initializer_list<Requirement> needs);

}  // namespace hfree
