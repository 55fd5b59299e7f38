#include "modcyc/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "modcyc/errors.hpp"
#include "modcyc/random.hpp"
#include "modcyc/residue.hpp"

namespace modcyc {

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ContractViolation("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, edges);
}

Graph random_graph(std::size_t n, double q, std::uint64_t seed) {
  if (!(q >= 0.0 && q <= 1.0)) throw ContractViolation("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (uniform_unit(rng) < q) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

namespace {

std::optional<std::vector<Edge>> pair_points(std::size_t n, std::size_t d, std::mt19937_64& rng) {
  std::vector<Vertex> points;
  points.reserve(n * d);
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), d, v);
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<Edge> edges;
  auto joinable = [&](Vertex a, Vertex b) {
    return a != b && std::find(adj[a].begin(), adj[a].end(), b) == adj[a].end();
  };
  while (!points.empty()) {
    std::size_t tries = 0;
    bool paired = false;
    while (tries++ < 64 * points.size()) {
      std::size_t i = uniform_below(rng, points.size());
      std::size_t j = uniform_below(rng, points.size());
      if (i == j || !joinable(points[i], points[j])) continue;
      Vertex a = points[i], b = points[j];
      adj[a].push_back(b);
      adj[b].push_back(a);
      edges.emplace_back(a, b);
      if (i < j) std::swap(i, j);
      points[i] = points.back();
      points.pop_back();
      points[j] = points.back();
      points.pop_back();
      paired = true;
      break;
    }
    if (!paired) return std::nullopt;
  }
  return edges;
}

}  // namespace

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d < 3 || n <= d || (n * d) % 2 != 0) {
    throw ContractViolation("random_regular needs d >= 3, n > d and n*d even (n = " + std::to_string(n) +
                            ", d = " + std::to_string(d) + ")");
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kRegularRestarts; ++attempt) {
    auto edges = pair_points(n, d, rng);
    if (!edges) continue;
    Graph g = Graph::from_edges(n, *edges);
    if (is_connected(g)) return g;
  }
  throw GenerationFailed("random_regular(" + std::to_string(n) + ", " + std::to_string(d) + ") failed after " +
                         std::to_string(kRegularRestarts) + " attempts");
}

Subdivision subdivide(const Graph& base, std::size_t times) {
  const std::size_t n = base.order();
  const auto base_edges = base.edges();
  Subdivision out;
  std::vector<Edge> edges;
  edges.reserve(base_edges.size() * (times + 1));
  Vertex next = static_cast<Vertex>(n);
  for (auto [u, v] : base_edges) {
    std::vector<Vertex> path{u};
    for (std::size_t i = 0; i < times; ++i) path.push_back(next++);
    path.push_back(v);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.emplace_back(path[i], path[i + 1]);
    out.edge_paths.push_back(std::move(path));
  }
  out.graph = Graph::from_edges(next, edges);
  return out;
}

Counterexample proposition_counterexample(std::uint64_t k, std::size_t base_n, std::uint64_t seed) {
  if (k < 2) throw ContractViolation("proposition_counterexample needs k > 1");
  Counterexample out;
  out.p = smallest_prime_divisor(k);
  out.base_n = base_n;
  out.base = random_regular(base_n, 3, seed);
  out.graph = subdivide(out.base, out.p - 1).graph;
  return out;
}

Graph subdivided_clique(std::size_t f, std::size_t k) {
  if (f < 3 || k < 1) throw ContractViolation("subdivided_clique needs f >= 3 and k >= 1");
  return subdivide(complete_graph(f), k - 1).graph;
}

std::vector<std::vector<Edge>> biconnected_components(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnseen = SIZE_MAX;
  std::vector<std::size_t> disc(n, kUnseen), low(n, 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> out;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::size_t timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnseen) continue;
    disc[root] = low[root] = timer++;
    frames.push_back({root, kNoVertex, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (w == f.parent) continue;
        if (disc[w] == kUnseen) {
          stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          frames.push_back({w, f.v, 0});
        } else if (disc[w] < disc[f.v]) {
          stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      const Vertex u = f.parent;
      frames.pop_back();
      if (u == kNoVertex) continue;
      low[u] = std::min(low[u], low[v]);
      if (low[v] >= disc[u]) {
        std::vector<Edge> comp;
        while (true) {
          Edge e = stack.back();
          stack.pop_back();
          comp.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
          if (e.first == u && e.second == v) break;
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

namespace {

/// A block (or any edge set) relabelled to 0..m-1.
struct LocalGraph {
  Graph graph;
  std::vector<Vertex> global;  // local -> g id
  std::map<Vertex, Vertex> local;

  explicit LocalGraph(const std::vector<Edge>& edges, std::optional<Edge> skip = std::nullopt) {
    for (auto [a, b] : edges) {
      for (Vertex w : {a, b}) {
        if (local.emplace(w, static_cast<Vertex>(global.size())).second) global.push_back(w);
      }
    }
    std::vector<Edge> relabelled;
    for (const Edge& e : edges) {
      if (skip && e == *skip) continue;
      relabelled.emplace_back(local.at(e.first), local.at(e.second));
    }
    graph = Graph::from_edges(global.size(), relabelled);
  }

  Vertex to_global(Vertex v) const { return global[v]; }
};

std::vector<std::uint8_t> two_coloring(const Graph& g, std::optional<CycleWitness>& odd_cycle) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> color(n, 2);
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<std::size_t> depth(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != 2) continue;
    color[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == 2) {
          color[w] = static_cast<std::uint8_t>(1 - color[v]);
          parent[w] = v;
          depth[w] = depth[v] + 1;
          q.push(w);
        } else if (color[w] == color[v]) {
          // Tree paths from v and w up to their common ancestor, plus vw.
          std::vector<Vertex> left{v}, right{w};
          Vertex a = v, b = w;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          odd_cycle = CycleWitness{std::move(left)};
          return {};
        }
      }
    }
  }
  return color;
}

/// Two internally disjoint a-b paths in a 2-connected graph (unit vertex capacities).
std::pair<std::vector<Vertex>, std::vector<Vertex>> disjoint_paths(const Graph& g, Vertex a, Vertex b) {
  const std::size_t n = g.order();
  struct Arc {
    std::size_t to;
    int cap;
    std::size_t rev;
  };
  std::vector<std::vector<Arc>> net(2 * n);
  auto add = [&](std::size_t from, std::size_t to, int cap) {
    net[from].push_back({to, cap, net[to].size()});
    net[to].push_back({from, 0, net[from].size() - 1});
  };
  // vertex v: in = 2v, out = 2v+1
  for (Vertex v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == a || v == b) ? 2 : 1);
  for (auto [u, v] : g.edges()) {
    add(2 * u + 1, 2 * v, 1);
    add(2 * v + 1, 2 * u, 1);
  }
  const std::size_t source = 2 * a + 1, sink = 2 * b;
  for (int round = 0; round < 2; ++round) {
    std::vector<std::pair<std::size_t, std::size_t>> via(2 * n, {SIZE_MAX, 0});
    std::queue<std::size_t> q;
    q.push(source);
    via[source] = {source, 0};
    while (!q.empty() && via[sink].first == SIZE_MAX) {
      std::size_t x = q.front();
      q.pop();
      for (std::size_t i = 0; i < net[x].size(); ++i) {
        const Arc& arc = net[x][i];
        if (arc.cap > 0 && via[arc.to].first == SIZE_MAX) {
          via[arc.to] = {x, i};
          q.push(arc.to);
        }
      }
    }
    if (via[sink].first == SIZE_MAX) throw InternalError("block is not 2-connected between the chosen vertices");
    for (std::size_t x = sink; x != source;) {
      auto [prev, i] = via[x];
      Arc& arc = net[prev][i];
      arc.cap -= 1;
      net[x][arc.rev].cap += 1;
      x = prev;
    }
  }
  // Flow on an edge arc u_out -> v_in is 1 - cap; opposite flows cancel.
  std::map<std::pair<Vertex, Vertex>, int> flow;
  for (Vertex u = 0; u < n; ++u) {
    for (const Arc& arc : net[2 * u + 1]) {
      if (arc.to % 2 == 0 && arc.to / 2 != u && arc.cap == 0) {
        flow[{u, static_cast<Vertex>(arc.to / 2)}] += 1;
      }
    }
  }
  for (auto& [e, f] : flow) {
    auto back = flow.find({e.second, e.first});
    if (f > 0 && back != flow.end() && back->second > 0) {
      f -= 1;
      back->second -= 1;
    }
  }
  std::vector<std::vector<Vertex>> paths;
  for (int round = 0; round < 2; ++round) {
    std::vector<Vertex> path{a};
    while (path.back() != b) {
      Vertex x = path.back();
      bool moved = false;
      for (Vertex w : g.neighbors(x)) {
        auto it = flow.find({x, w});
        if (it != flow.end() && it->second > 0) {
          it->second -= 1;
          path.push_back(w);
          moved = true;
          break;
        }
      }
      if (!moved || path.size() > n + 1) throw InternalError("flow decomposition failed");
    }
    paths.push_back(std::move(path));
  }
  return {paths[0], paths[1]};
}

/// Edges of `block` that lie on exactly the same cycles as e.
std::vector<Edge> series_class(const std::vector<Edge>& block, const Edge& e) {
  LocalGraph without(block, e);
  std::vector<Edge> out{e};
  for (const auto& comp : biconnected_components(without.graph)) {
    if (comp.size() == 1) {
      Vertex a = without.to_global(comp[0].first), b = without.to_global(comp[0].second);
      out.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A cycle through e whose length is not a multiple of p, given that e's series class has bad size.
CycleWitness violating_cycle_through(const std::vector<Edge>& block, const Edge& e, std::uint64_t p) {
  LocalGraph without(block, e);
  const Vertex x = without.local.at(e.first), y = without.local.at(e.second);
  auto spine = shortest_path_between_sets(without.graph, VertexSet(without.graph.order(), {x}),
                                          VertexSet(without.graph.order(), {y}));
  if (!spine) throw InternalError("block minus an edge is disconnected");
  const auto comps = biconnected_components(without.graph);
  std::map<Edge, std::size_t> comp_of;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (const Edge& f : comps[c]) comp_of[f] = c;
  }
  auto comp_id = [&](Vertex a, Vertex b) { return comp_of.at({std::min(a, b), std::max(a, b)}); };

  // The spine crosses a chain of pieces; in each 2-connected piece take two disjoint routes.
  struct Piece {
    std::vector<Vertex> first, second;
  };
  std::vector<Piece> pieces;
  const auto& sv = spine->vertices;
  std::size_t start = 0;
  while (start + 1 < sv.size()) {
    const std::size_t c = comp_id(sv[start], sv[start + 1]);
    std::size_t end = start + 1;
    while (end + 1 < sv.size() && comp_id(sv[end], sv[end + 1]) == c) ++end;
    Piece piece;
    if (comps[c].size() == 1) {
      piece.first = piece.second = {sv[start], sv[end]};
    } else {
      LocalGraph sub(comps[c]);
      auto [r1, r2] = disjoint_paths(sub.graph, sub.local.at(sv[start]), sub.local.at(sv[end]));
      for (Vertex& w : r1) w = sub.to_global(w);
      for (Vertex& w : r2) w = sub.to_global(w);
      piece.first = std::move(r1);
      piece.second = std::move(r2);
    }
    pieces.push_back(std::move(piece));
    start = end;
  }

  auto through = [&](std::size_t switched) {
    std::vector<Vertex> cyc{sv.front()};
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const auto& route = i == switched ? pieces[i].second : pieces[i].first;
      cyc.insert(cyc.end(), route.begin() + 1, route.end());
    }
    return cyc;  // x ... y, closed by e
  };
  std::vector<std::vector<Vertex>> candidates{through(SIZE_MAX)};
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].first == pieces[i].second) continue;
    candidates.push_back(through(i));
    std::vector<Vertex> loop = pieces[i].first;
    loop.insert(loop.end(), pieces[i].second.rbegin() + 1, pieces[i].second.rend() - 1);
    candidates.push_back(std::move(loop));
  }
  for (auto& c : candidates) {
    if (c.size() % p == 0) continue;
    for (Vertex& w : c) w = without.to_global(w);
    return CycleWitness{std::move(c)};
  }
  throw InternalError("no candidate cycle has a length off the multiples of p");
}

}  // namespace

DivisibilityResult verify_divisibility(const Graph& g, std::uint64_t p) {
  if (p < 2) throw ContractViolation("verify_divisibility needs p >= 2");
  if (p % 2 == 0 && p != 2) throw ContractViolation("verify_divisibility supports p = 2 and odd p");
  DivisibilityResult out;
  out.p = p;
  if (p == 2) {
    out.coloring = two_coloring(g, out.violating_cycle);
    out.divisible = !out.violating_cycle;
  } else {
    out.divisible = true;
    for (const auto& block : biconnected_components(g)) {
      if (block.size() < 2) continue;
      std::vector<bool> done(block.size(), false);
      for (std::size_t i = 0; i < block.size() && out.divisible; ++i) {
        if (done[i]) continue;
        auto cls = series_class(block, block[i]);
        for (const Edge& f : cls) done[std::lower_bound(block.begin(), block.end(), f) - block.begin()] = true;
        if (cls.size() % p != 0) {
          out.divisible = false;
          out.violating_cycle = violating_cycle_through(block, block[i], p);
          out.series_classes.clear();
          break;
        }
        out.series_classes.push_back(std::move(cls));
      }
      if (!out.divisible) break;
    }
  }
  if (out.violating_cycle) {
    *out.violating_cycle = canonical(*out.violating_cycle);
    if (!validate_cycle(g, *out.violating_cycle) || out.violating_cycle->length() % p == 0) {
      throw InternalError("divisibility certificate failed validation");
    }
  }
  return out;
}

}  // namespace modcyc
