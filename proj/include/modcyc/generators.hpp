#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "modcyc/graph.hpp"

namespace modcyc {

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph petersen_graph();

/// G(n, q): each pair independently with probability q.
Graph random_graph(std::size_t n, double q, std::uint64_t seed);

inline constexpr int kRegularRestarts = 100;

/// Simple connected d-regular graph. Points are paired one at a time, refusing
/// pairs that would form a loop or a repeated edge; dead ends and disconnected
/// results restart, up to kRegularRestarts times (then GenerationFailed).
/// Requires n d even, d >= 3, n > d.
Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

struct Subdivision {
  Graph graph;
  /// For the i-th edge (u, v) of base.edges(): the path u, ..., v in `graph`.
  std::vector<std::vector<Vertex>> edge_paths;
};

/// Replaces every edge by a path with `times` internal vertices. Base vertices
/// keep their ids; internal vertices of edge i are n + i*times, ... in order from u.
Subdivision subdivide(const Graph& base, std::size_t times);

struct Counterexample {
  Graph graph;
  Graph base;
  std::uint64_t p = 0;
  std::size_t base_n = 0;
};

/// A random cubic graph on base_n vertices with every edge subdivided p-1
/// times, p the smallest prime divisor of k: all cycle lengths are multiples of p.
Counterexample proposition_counterexample(std::uint64_t k, std::size_t base_n, std::uint64_t seed);

/// K_f with every edge replaced by a path of length k.
Graph subdivided_clique(std::size_t f, std::size_t k);

struct DivisibilityResult {
  bool divisible = false;
  std::uint64_t p = 0;
  /// p = 2 and divisible: a proper 2-colouring.
  std::vector<std::uint8_t> coloring;
  /// Odd p and divisible: every series class of every block, each of size ≡ 0 (mod p).
  std::vector<std::vector<Edge>> series_classes;
  /// Not divisible: a cycle whose length is not a multiple of p.
  std::optional<CycleWitness> violating_cycle;
};

/// Decides whether every cycle length is a multiple of p without enumerating
/// cycles. p = 2: bipartiteness. Odd p: within each block, edges lying on
/// exactly the same cycles form series classes, every cycle is a union of
/// classes, and all cycles are multiples of p iff every class size is.
/// Even p >= 4 throws ContractViolation.
DivisibilityResult verify_divisibility(const Graph& g, std::uint64_t p);

/// Edge sets of the biconnected components (a bridge is a component with one edge).
std::vector<std::vector<Edge>> biconnected_components(const Graph& g);

}  // namespace modcyc
