#pragma once

#include <map>
#include <string>
#include <vector>

#include "hfree/error.hpp"
#include "hfree/solver.hpp"

namespace hfree::detail {

class Builder {
 public:
  explicit Builder(Mode mode) { inst_.mode = mode; }
  explicit Builder(SandwichInstance base) : inst_(std::move(base)) {}

  Graph& graph() { return inst_.graph; }
  const SandwichInstance& instance() const { return inst_; }

  Vertex fresh(std::size_t count = 1) { return inst_.graph.add_vertices(count); }

  // Places a copy of `local`. Local vertices listed in `fixed` reuse the
  // given host vertices; the rest are fresh, allocated in local order.
  std::vector<Vertex> place(const Graph& local,
                            const std::map<Vertex, Vertex>& fixed = {}) {
    std::vector<Vertex> map(local.vertex_count());
    for (Vertex x = 0; x < local.vertex_count(); ++x) {
      auto it = fixed.find(x);
      map[x] = it != fixed.end() ? it->second : fresh();
    }
    for (const auto& e : local.edges()) inst_.graph.add_edge(map[e.u], map[e.v]);
    return map;
  }

  void make_free(VertexPair e) { inst_.free_elements.insert(e); }

  void label(const std::string& name, VertexPair e) {
    if (!inst_.labels.emplace(name, e).second)
      throw PreconditionError("duplicate label " + name);
  }

  SandwichInstance finish() {
    inst_.validate();
    return std::move(inst_);
  }

 private:
  SandwichInstance inst_;
};

// Identification of a local pair with a host pair, min to min.
inline void identify(std::map<Vertex, Vertex>& fixed, VertexPair local, VertexPair host) {
  fixed[local.u] = host.u;
  fixed[local.v] = host.v;
}

inline VertexPair mapped(const std::vector<Vertex>& map, VertexPair local) {
  return {map[local.u], map[local.v]};
}

inline std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace hfree::detail
