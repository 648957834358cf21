#include "hfree/graph.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace hfree {

Graph::Graph(std::size_t vertex_count)
    : rows_(vertex_count), degree_(vertex_count, 0) {}

Graph Graph::from_edges(std::size_t vertex_count,
                        std::span<const VertexPair> edges) {
  Graph g(vertex_count);
  for (const auto& e : edges) g.add_edge(e);
  return g;
}

Vertex Graph::add_vertices(std::size_t count) {
  auto first = static_cast<Vertex>(rows_.size());
  rows_.resize(rows_.size() + count);
  degree_.resize(rows_.size(), 0);
  return first;
}

void Graph::check_pair(Vertex a, Vertex b) const {
  if (a == b) throw std::out_of_range("self-loop at vertex " + std::to_string(a));
  if (a >= rows_.size() || b >= rows_.size())
    throw std::out_of_range("vertex out of range: {" + std::to_string(a) + "," +
                            std::to_string(b) + "}");
}

bool Graph::add_edge(Vertex a, Vertex b) {
  check_pair(a, b);
  if (has_edge(a, b)) return false;
  auto set_bit = [this](Vertex x, Vertex y) {
    auto& row = rows_[x];
    if (row.size() <= (y >> 6)) row.resize((y >> 6) + 1, 0);
    row[y >> 6] |= std::uint64_t{1} << (y & 63);
  };
  set_bit(a, b);
  set_bit(b, a);
  ++degree_[a];
  ++degree_[b];
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(Vertex a, Vertex b) {
  check_pair(a, b);
  if (!has_edge(a, b)) return false;
  rows_[a][b >> 6] &= ~(std::uint64_t{1} << (b & 63));
  rows_[b][a >> 6] &= ~(std::uint64_t{1} << (a & 63));
  --degree_[a];
  --degree_[b];
  --edge_count_;
  return true;
}

std::vector<Vertex> Graph::neighbors(Vertex a) const {
  std::vector<Vertex> out;
  out.reserve(degree_.at(a));
  for_each_neighbor(a, [&](Vertex b) { out.push_back(b); });
  return out;
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  out.reserve(edge_count_);
  for (Vertex a = 0; a < rows_.size(); ++a)
    for_each_neighbor(a, [&](Vertex b) {
      if (a < b) out.emplace_back(a, b);
    });
  return out;
}

std::vector<VertexPair> Graph::non_edges() const {
  std::vector<VertexPair> out;
  for (Vertex a = 0; a < rows_.size(); ++a)
    for (Vertex b = a + 1; b < rows_.size(); ++b)
      if (!has_edge(a, b)) out.emplace_back(a, b);
  return out;
}

Graph Graph::induced(std::span<const Vertex> vs) const {
  Graph g(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (has_edge(vs[i], vs[j]))
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

bool Graph::operator==(const Graph& o) const {
  if (vertex_count() != o.vertex_count() || edge_count_ != o.edge_count_)
    return false;
  for (Vertex a = 0; a < rows_.size(); ++a) {
    bool same = true;
    for_each_neighbor(a, [&](Vertex b) { same = same && o.has_edge(a, b); });
    if (!same) return false;
  }
  return true;
}

Graph complement(const Graph& g) {
  Graph c(g.vertex_count());
  for (const auto& e : g.non_edges()) c.add_edge(e);
  return c;
}

bool is_connected(const Graph& g, std::span<const Vertex> removed) {
  std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  for (Vertex r : removed) seen.at(r) = 1;
  std::size_t remaining = 0;
  Vertex start = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v]) {
      if (remaining == 0) start = v;
      ++remaining;
    }
  if (remaining == 0) return false;
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    g.for_each_neighbor(x, [&](Vertex y) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    });
  }
  return reached == remaining;
}

namespace {

// Whether g minus `skip` has a cut vertex (lowpoint DFS). Assumes the
// remaining graph is connected.
bool has_cut_vertex(const Graph& g, Vertex skip) {
  std::size_t n = g.vertex_count();
  const int unseen = -1;
  std::vector<int> disc(n, unseen), low(n, 0);
  int timer = 0;
  Vertex root = skip == 0 ? 1 : 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::vector<Vertex> nbrs;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  disc[root] = low[root] = timer++;
  stack.push_back({root, root, g.neighbors(root)});
  int root_children = 0;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < f.nbrs.size()) {
      Vertex w = f.nbrs[f.next++];
      if (w == skip) continue;
      if (disc[w] == unseen) {
        if (f.v == root) ++root_children;
        disc[w] = low[w] = timer++;
        Vertex v = f.v;
        stack.push_back({w, v, g.neighbors(w)});
      } else if (w != f.parent) {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    Vertex v = f.v, parent = f.parent;
    stack.pop_back();
    if (stack.empty()) break;
    low[parent] = std::min(low[parent], low[v]);
    if (parent != root && low[v] >= disc[parent]) return true;
  }
  return root_children > 1;
}

}  // namespace

bool is_3_connected(const Graph& g) {
  std::size_t n = g.vertex_count();
  if (n < 3) return false;
  if (!is_connected(g)) return false;
  for (Vertex v = 0; v < n; ++v) {
    Vertex rm[] = {v};
    if (!is_connected(g, rm)) return false;
    if (n - 1 >= 3 && has_cut_vertex(g, v)) return false;
  }
  return true;
}

InducedMatcher::InducedMatcher(Graph pattern) : pattern_(std::move(pattern)) {
  std::size_t p = pattern_.vertex_count();
  if (p == 0) return;
  Vertex start = 0;
  for (Vertex x = 1; x < p; ++x)
    if (pattern_.degree(x) > pattern_.degree(start)) start = x;
  full_plan_ = make_plan({start});
  anchored_.resize(p * p);
  for (Vertex a = 0; a < p; ++a)
    for (Vertex b = 0; b < p; ++b)
      if (a != b) anchored_[a * p + b] = make_plan({a, b});
}

InducedMatcher::Plan InducedMatcher::make_plan(std::vector<Vertex> seed) const {
  std::size_t p = pattern_.vertex_count();
  Plan plan;
  std::vector<char> placed(p, 0);
  for (Vertex s : seed) {
    plan.order.push_back(s);
    plan.parent.push_back(-1);
    placed[s] = 1;
  }
  while (plan.order.size() < p) {
    int best = -1, best_links = -1;
    for (Vertex x = 0; x < p; ++x) {
      if (placed[x]) continue;
      int links = 0;
      for (Vertex y : plan.order) links += pattern_.has_edge(x, y);
      if (links > best_links ||
          (links == best_links &&
           pattern_.degree(x) > pattern_.degree(static_cast<Vertex>(best)))) {
        best = static_cast<int>(x);
        best_links = links;
      }
    }
    auto x = static_cast<Vertex>(best);
    int parent = -1;
    for (std::size_t i = 0; i < plan.order.size(); ++i)
      if (pattern_.has_edge(x, plan.order[i])) {
        parent = static_cast<int>(i);
        break;
      }
    plan.order.push_back(x);
    plan.parent.push_back(parent);
    placed[x] = 1;
  }
  return plan;
}

bool InducedMatcher::extend(const Graph& host, const Plan& plan,
                            std::size_t depth, std::vector<Vertex>& image,
                            std::vector<char>& used,
                            const Visitor& visit) const {
  if (depth == plan.order.size()) return visit(image);
  Vertex x = plan.order[depth];
  std::size_t need = pattern_.degree(x);
  auto try_vertex = [&](Vertex c) -> bool {
    if (used[c] || host.degree(c) < need) return true;
    for (std::size_t i = 0; i < depth; ++i) {
      Vertex y = plan.order[i];
      if (host.has_edge(c, image[y]) != pattern_.has_edge(x, y)) return true;
    }
    image[x] = c;
    used[c] = 1;
    bool go_on = extend(host, plan, depth + 1, image, used, visit);
    used[c] = 0;
    return go_on;
  };
  int parent = plan.parent[depth];
  if (parent >= 0) {
    for (Vertex c : host.neighbors(image[plan.order[parent]]))
      if (!try_vertex(c)) return false;
  } else {
    for (Vertex c = 0; c < host.vertex_count(); ++c)
      if (!try_vertex(c)) return false;
  }
  return true;
}

bool InducedMatcher::for_each_embedding(const Graph& host,
                                        const Visitor& visit) const {
  std::size_t p = pattern_.vertex_count();
  if (p == 0) return visit({});
  if (p > host.vertex_count()) return true;
  std::vector<Vertex> image(p, 0);
  std::vector<char> used(host.vertex_count(), 0);
  return extend(host, full_plan_, 0, image, used, visit);
}

bool InducedMatcher::for_each_embedding_through(const Graph& host, Vertex a,
                                                Vertex b,
                                                const Visitor& visit) const {
  std::size_t p = pattern_.vertex_count();
  if (p < 2 || p > host.vertex_count() || a == b) return true;
  bool adjacent = host.has_edge(a, b);
  std::vector<Vertex> image(p, 0);
  std::vector<char> used(host.vertex_count(), 0);
  used[a] = used[b] = 1;
  for (Vertex x = 0; x < p; ++x)
    for (Vertex y = 0; y < p; ++y) {
      if (x == y || pattern_.has_edge(x, y) != adjacent) continue;
      if (host.degree(a) < pattern_.degree(x) ||
          host.degree(b) < pattern_.degree(y))
        continue;
      image[x] = a;
      image[y] = b;
      if (!extend(host, anchored_[x * p + y], 2, image, used, visit))
        return false;
    }
  return true;
}

std::optional<VertexCorrespondence> InducedMatcher::find(
    const Graph& host) const {
  std::optional<VertexCorrespondence> found;
  for_each_embedding(host, [&](std::span<const Vertex> image) {
    found = VertexCorrespondence{{image.begin(), image.end()}};
    return false;
  });
  return found;
}

namespace {

std::vector<std::vector<Vertex>> collect_sets(
    const std::function<void(const InducedMatcher::Visitor&)>& run) {
  std::set<std::vector<Vertex>> sets;
  run([&](std::span<const Vertex> image) {
    std::vector<Vertex> s(image.begin(), image.end());
    std::sort(s.begin(), s.end());
    sets.insert(std::move(s));
    return true;
  });
  return {sets.begin(), sets.end()};
}

}  // namespace

std::vector<std::vector<Vertex>> InducedMatcher::copies(const Graph& host) const {
  return collect_sets([&](const Visitor& v) { for_each_embedding(host, v); });
}

std::vector<std::vector<Vertex>> InducedMatcher::copies_through(
    const Graph& host, Vertex a, Vertex b) const {
  return collect_sets(
      [&](const Visitor& v) { for_each_embedding_through(host, a, b, v); });
}

std::optional<VertexCorrespondence> find_induced_copy(const Graph& host,
                                                      const Graph& pattern) {
  return InducedMatcher(pattern).find(host);
}

std::vector<std::vector<Vertex>> enumerate_induced_copies(const Graph& host,
                                                          const Graph& pattern) {
  return InducedMatcher(pattern).copies(host);
}

bool is_h_free(const Graph& host, const Graph& pattern) {
  return !find_induced_copy(host, pattern).has_value();
}

bool is_induced_embedding(const Graph& host, const Graph& pattern,
                          std::span<const Vertex> image) {
  std::size_t p = pattern.vertex_count();
  if (image.size() != p) return false;
  for (std::size_t i = 0; i < p; ++i) {
    if (image[i] >= host.vertex_count()) return false;
    for (std::size_t j = i + 1; j < p; ++j) {
      if (image[i] == image[j]) return false;
      if (host.has_edge(image[i], image[j]) !=
          pattern.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)))
        return false;
    }
  }
  return true;
}

bool has_c4_subgraph(std::size_t vertex_count,
                     std::span<const VertexPair> edges) {
  Graph g = Graph::from_edges(vertex_count, edges);
  std::set<VertexPair> wedge_ends;
  for (Vertex x = 0; x < vertex_count; ++x) {
    auto nb = g.neighbors(x);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!wedge_ends.insert(VertexPair(nb[i], nb[j])).second) return true;
  }
  return false;
}

}  // namespace hfree
