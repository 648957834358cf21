#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace hfree {

using Vertex = std::uint32_t;

// Unordered vertex pair, kept min-first.
struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;

  VertexPair() = default;
  VertexPair(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool contains(Vertex x) const { return u == x || v == x; }
  bool disjoint_from(const VertexPair& o) const {
    return !contains(o.u) && !contains(o.v);
  }
  auto operator<=>(const VertexPair&) const = default;
};

using PairSet = std::set<VertexPair>;

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);
  static Graph from_edges(std::size_t vertex_count,
                          std::span<const VertexPair> edges);

  std::size_t vertex_count() const { return rows_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  // Returns the index of the first new vertex.
  Vertex add_vertices(std::size_t count);
  Vertex add_vertex() { return add_vertices(1); }

  // Both return whether the edge set changed. Self-loops and
  // out-of-range endpoints throw std::out_of_range.
  bool add_edge(Vertex a, Vertex b);
  bool add_edge(VertexPair e) { return add_edge(e.u, e.v); }
  bool remove_edge(Vertex a, Vertex b);
  bool remove_edge(VertexPair e) { return remove_edge(e.u, e.v); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a == b || a >= rows_.size() || b >= rows_.size()) return false;
    const auto& row = rows_[a];
    std::size_t w = b >> 6;
    return w < row.size() && ((row[w] >> (b & 63)) & 1u);
  }
  bool has_edge(VertexPair e) const { return has_edge(e.u, e.v); }

  std::size_t degree(Vertex a) const { return degree_.at(a); }
  std::vector<Vertex> neighbors(Vertex a) const;

  template <class F>
  void for_each_neighbor(Vertex a, F&& f) const {
    const auto& row = rows_[a];
    for (std::size_t w = 0; w < row.size(); ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        f(static_cast<Vertex>(w * 64 + b));
      }
    }
  }

  // Sorted lexicographically.
  std::vector<VertexPair> edges() const;
  std::vector<VertexPair> non_edges() const;

  // Subgraph induced by `vs`, relabelled 0..|vs|-1 in the given order.
  Graph induced(std::span<const Vertex> vs) const;

  bool operator==(const Graph& o) const;

 private:
  void check_pair(Vertex a, Vertex b) const;

  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> degree_;
  std::size_t edge_count_ = 0;
};

Graph complement(const Graph& g);

// Connected after removing `removed`; a graph with one remaining vertex
// counts as connected, zero remaining vertices does not.
bool is_connected(const Graph& g, std::span<const Vertex> removed = {});

bool is_3_connected(const Graph& g);

// image[i] is the host vertex assigned to pattern vertex i.
struct VertexCorrespondence {
  std::vector<Vertex> image;
};

// Backtracking induced-subgraph matcher for one fixed pattern.
class InducedMatcher {
 public:
  using Visitor = std::function<bool(std::span<const Vertex>)>;

  explicit InducedMatcher(Graph pattern);

  const Graph& pattern() const { return pattern_; }

  // Calls visit(image) for every embedding; stops early when visit
  // returns false. Returns false iff stopped early.
  bool for_each_embedding(const Graph& host, const Visitor& visit) const;

  // Embeddings whose image contains both a and b.
  bool for_each_embedding_through(const Graph& host, Vertex a, Vertex b,
                                  const Visitor& visit) const;

  std::optional<VertexCorrespondence> find(const Graph& host) const;

  // Distinct sorted vertex sets inducing the pattern, sorted.
  std::vector<std::vector<Vertex>> copies(const Graph& host) const;
  std::vector<std::vector<Vertex>> copies_through(const Graph& host, Vertex a,
                                                  Vertex b) const;

 private:
  struct Plan {
    std::vector<Vertex> order;  // pattern vertices in placement order
    std::vector<int> parent;    // earlier-placed neighbour, or -1
  };
  Plan make_plan(std::vector<Vertex> seed) const;
  bool extend(const Graph& host, const Plan& plan, std::size_t depth,
              std::vector<Vertex>& image, std::vector<char>& used,
              const Visitor& visit) const;

  Graph pattern_;
  Plan full_plan_;
  std::vector<Plan> anchored_;  // indexed a * p + b
};

std::optional<VertexCorrespondence> find_induced_copy(const Graph& host,
                                                      const Graph& pattern);
std::vector<std::vector<Vertex>> enumerate_induced_copies(const Graph& host,
                                                          const Graph& pattern);
bool is_h_free(const Graph& host, const Graph& pattern);

// Whether `image` maps pattern onto an induced copy in host.
bool is_induced_embedding(const Graph& host, const Graph& pattern,
                          std::span<const Vertex> image);

// Whether some (not necessarily induced) 4-cycle uses only edges in
// `edges`; equivalently some pair has two common neighbours.
bool has_c4_subgraph(std::size_t vertex_count,
                     std::span<const VertexPair> edges);

}  // namespace hfree
