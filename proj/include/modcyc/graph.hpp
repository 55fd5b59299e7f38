#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace modcyc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Immutable simple undirected graph on vertices 0..n-1 stored as sorted
/// adjacency lists (CSR).
///
/// Graphs derived from another graph (induced subgraphs, subdivisions) carry
/// `origin()`: for each local vertex, its identifier in the root graph the
/// derivation chain started from. Root graphs map every vertex to itself.
class Graph {
 public:
  Graph() = default;

  /// Throws ContractViolation on self-loops, parallel edges or ids >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v < order(); }

  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  std::span<const Vertex> origin() const { return origin_; }
  Vertex origin(Vertex v) const { return origin_[v]; }

  /// Same structure, with the origin map replaced.
  Graph with_origin(std::vector<Vertex> origin) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<Vertex> origin_;
};

/// Subset of the vertices of a graph with `universe` vertices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : mask_(universe, false) {}
  /// Members may be unsorted and repeated; throws ContractViolation if any is >= universe.
  VertexSet(std::size_t universe, std::span<const Vertex> members);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

  static VertexSet all(std::size_t universe);

  std::size_t universe() const { return mask_.size(); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const { return v < mask_.size() && mask_[v]; }

  /// Sorted members.
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  void insert(Vertex v);

  VertexSet united(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  VertexSet intersected(const VertexSet& other) const;
  VertexSet complement() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.members_ == b.members_ && a.universe() == b.universe();
  }

 private:
  std::vector<bool> mask_;
  std::vector<Vertex> members_;
};

/// Path v0, ..., v_l; a single vertex is a path of length 0.
struct PathWitness {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

/// Cycle c0, ..., c_{l-1} (the closing edge c_{l-1} c0 is implicit).
struct CycleWitness {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

bool validate_path(const Graph& g, const PathWitness& p);
bool validate_cycle(const Graph& g, const CycleWitness& c);

/// Rotates so the smallest vertex comes first, then orients toward the smaller
/// of its two cycle neighbours.
CycleWitness canonical(const CycleWitness& c);

/// Maps local identifiers of a derived graph to root identifiers via `origin()`.
PathWitness lift(const Graph& derived, const PathWitness& p);
CycleWitness lift(const Graph& derived, const CycleWitness& c);

/// For a derived graph, the local id of each root vertex (kNoVertex when absent).
std::vector<Vertex> local_index(const Graph& derived, std::size_t root_order);

/// Translates root ids into local ids of `derived`, dropping absent vertices.
VertexSet localize(const Graph& derived, std::span<const Vertex> root_vertices);

/// N(X): vertices outside X with a neighbour in X.
VertexSet external_neighborhood(const Graph& g, const VertexSet& x);

/// G - X, the subgraph induced on the complement of X; origins are composed.
Graph remove_vertices(const Graph& g, const VertexSet& x);

/// Shortest path whose first vertex is in `a`, last in `b`, internal vertices
/// outside a and b. BFS starts from the sources in ascending order and scans
/// neighbours in ascending order. Returns nullopt when no such path exists.
std::optional<PathWitness> shortest_path_between_sets(const Graph& g, const VertexSet& a,
                                                      const VertexSet& b);

/// As above, in g - avoid. Vertices of `avoid` never appear on the path.
std::optional<PathWitness> shortest_path_between_sets(const Graph& g, const VertexSet& a,
                                                      const VertexSet& b,
                                                      const VertexSet& avoid);

/// BFS distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

/// Exact diameter; nullopt when g is disconnected. The empty graph has diameter 0.
std::optional<std::size_t> diameter(const Graph& g);

bool is_connected(const Graph& g);

/// Exactly m vertices inducing a connected subgraph: the first m vertices of a
/// BFS order from vertex 0, i.e. a spanning tree pruned leaf by leaf.
VertexSet connected_subset_of_size(const Graph& g, std::size_t m);

}  // namespace modcyc
