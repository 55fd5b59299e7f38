#include "modcyc/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "modcyc/errors.hpp"

namespace modcyc {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::size_t> degree(n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw ContractViolation("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") out of range for n = " + std::to_string(n));
    }
    if (u == v) throw ContractViolation("self-loop at vertex " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }
  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    g.targets_[fill[u]++] = v;
    g.targets_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw ContractViolation("parallel edge at vertex " + std::to_string(v));
    }
  }
  g.origin_.resize(n);
  std::iota(g.origin_.begin(), g.origin_.end(), Vertex{0});
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_origin(std::vector<Vertex> origin) const {
  if (origin.size() != order()) throw ContractViolation("origin map size mismatch");
  Graph g = *this;
  g.origin_ = std::move(origin);
  return g;
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : mask_(universe, false) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::all(std::size_t universe) {
  VertexSet s(universe);
  s.mask_.assign(universe, true);
  s.members_.resize(universe);
  std::iota(s.members_.begin(), s.members_.end(), Vertex{0});
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= mask_.size()) {
    throw ContractViolation("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(mask_.size()));
  }
  if (mask_[v]) return;
  mask_[v] = true;
  members_.insert(std::upper_bound(members_.begin(), members_.end(), v), v);
}

namespace {

void require_same_universe(const VertexSet& a, const VertexSet& b) {
  if (a.universe() != b.universe()) throw ContractViolation("vertex sets over different graphs");
}

VertexSet from_mask(std::vector<bool> mask) {
  std::vector<Vertex> members;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) members.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(mask.size(), members);
}

void require_valid(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.order()) {
    throw ContractViolation("vertex set over " + std::to_string(x.universe()) +
                            " vertices used with a graph of order " + std::to_string(g.order()));
  }
}

bool member(const VertexSet& s, Vertex v) { return s.contains(v); }

}  // namespace

VertexSet VertexSet::united(const VertexSet& other) const {
  require_same_universe(*this, other);
  std::vector<bool> m = mask_;
  for (Vertex v : other.members_) m[v] = true;
  return from_mask(std::move(m));
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  require_same_universe(*this, other);
  std::vector<Vertex> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out));
  return VertexSet(universe(), out);
}

VertexSet VertexSet::intersected(const VertexSet& other) const {
  require_same_universe(*this, other);
  std::vector<Vertex> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
  return VertexSet(universe(), out);
}

VertexSet VertexSet::complement() const {
  std::vector<bool> m = mask_;
  m.flip();
  return from_mask(std::move(m));
}

bool validate_path(const Graph& g, const PathWitness& p) {
  if (p.vertices.empty()) return false;
  std::vector<bool> seen(g.order(), false);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Vertex v = p.vertices[i];
    if (v >= g.order() || seen[v]) return false;
    seen[v] = true;
    if (i > 0 && !g.adjacent(p.vertices[i - 1], v)) return false;
  }
  return true;
}

bool validate_cycle(const Graph& g, const CycleWitness& c) {
  if (c.vertices.size() < 3) return false;
  PathWitness open{c.vertices};
  return validate_path(g, open) && g.adjacent(c.vertices.back(), c.vertices.front());
}

CycleWitness canonical(const CycleWitness& c) {
  if (c.vertices.empty()) return c;
  auto min_it = std::min_element(c.vertices.begin(), c.vertices.end());
  std::vector<Vertex> out(c.vertices.size());
  std::rotate_copy(c.vertices.begin(), min_it, c.vertices.end(), out.begin());
  if (out.size() > 2 && out.back() < out[1]) std::reverse(out.begin() + 1, out.end());
  return CycleWitness{std::move(out)};
}

PathWitness lift(const Graph& derived, const PathWitness& p) {
  PathWitness out;
  out.vertices.reserve(p.vertices.size());
  for (Vertex v : p.vertices) out.vertices.push_back(derived.origin(v));
  return out;
}

CycleWitness lift(const Graph& derived, const CycleWitness& c) {
  CycleWitness out;
  out.vertices.reserve(c.vertices.size());
  for (Vertex v : c.vertices) out.vertices.push_back(derived.origin(v));
  return out;
}

std::vector<Vertex> local_index(const Graph& derived, std::size_t root_order) {
  std::vector<Vertex> idx(root_order, kNoVertex);
  for (Vertex v = 0; v < derived.order(); ++v) {
    Vertex o = derived.origin(v);
    if (o >= root_order) throw ContractViolation("origin id exceeds root order");
    idx[o] = v;
  }
  return idx;
}

VertexSet localize(const Graph& derived, std::span<const Vertex> root_vertices) {
  std::size_t root_order = 0;
  for (Vertex o : derived.origin()) root_order = std::max<std::size_t>(root_order, o + 1);
  for (Vertex v : root_vertices) root_order = std::max<std::size_t>(root_order, v + 1);
  auto idx = local_index(derived, root_order);
  VertexSet out(derived.order());
  for (Vertex v : root_vertices) {
    if (idx[v] != kNoVertex) out.insert(idx[v]);
  }
  return out;
}

VertexSet external_neighborhood(const Graph& g, const VertexSet& x) {
  require_valid(g, x);
  std::vector<bool> mark(g.order(), false);
  for (Vertex v : x) {
    for (Vertex w : g.neighbors(v)) {
      if (!member(x, w)) mark[w] = true;
    }
  }
  return from_mask(std::move(mark));
}

Graph remove_vertices(const Graph& g, const VertexSet& x) {
  require_valid(g, x);
  std::vector<Vertex> new_id(g.order(), kNoVertex);
  std::vector<Vertex> origin;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!member(x, v)) {
      new_id[v] = static_cast<Vertex>(origin.size());
      origin.push_back(g.origin(v));
    }
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (new_id[u] != kNoVertex && new_id[v] != kNoVertex) edges.emplace_back(new_id[u], new_id[v]);
  }
  return Graph::from_edges(origin.size(), edges).with_origin(std::move(origin));
}

std::optional<PathWitness> shortest_path_between_sets(const Graph& g, const VertexSet& a,
                                                      const VertexSet& b) {
  return shortest_path_between_sets(g, a, b, VertexSet(g.order()));
}

std::optional<PathWitness> shortest_path_between_sets(const Graph& g, const VertexSet& a,
                                                      const VertexSet& b,
                                                      const VertexSet& avoid) {
  require_valid(g, a);
  require_valid(g, b);
  require_valid(g, avoid);
  for (Vertex v : a) {
    if (member(b, v) && !member(avoid, v)) return PathWitness{{v}};
  }
  std::vector<Vertex> parent(g.order(), kNoVertex);
  std::vector<bool> seen(g.order(), false);
  std::deque<Vertex> queue;
  for (Vertex v : a) {
    if (member(avoid, v)) continue;
    seen[v] = true;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (seen[w] || member(avoid, w)) continue;
      seen[w] = true;
      parent[w] = v;
      if (member(b, w)) {
        PathWitness p;
        for (Vertex c = w; c != kNoVertex; c = parent[c]) p.vertices.push_back(c);
        std::reverse(p.vertices.begin(), p.vertices.end());
        return p;
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.order(), SIZE_MAX);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == SIZE_MAX) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (std::size_t d : bfs_distances(g, s)) {
      if (d == SIZE_MAX) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == SIZE_MAX; });
}

VertexSet connected_subset_of_size(const Graph& g, std::size_t m) {
  if (m < 1 || m > g.order()) {
    throw ContractViolation("subset size " + std::to_string(m) + " outside [1, " +
                            std::to_string(g.order()) + "]");
  }
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> order{0};
  seen[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : g.neighbors(order[head])) {
      if (!seen[w]) {
        seen[w] = true;
        order.push_back(w);
      }
    }
  }
  if (order.size() != g.order()) throw NotConnected("connected_subset_of_size: graph is disconnected");
  order.resize(m);
  return VertexSet(g.order(), order);
}

}  // namespace modcyc
