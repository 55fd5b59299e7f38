#include "modcyc/cycle_search.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "modcyc/errors.hpp"
#include "modcyc/random.hpp"

namespace modcyc {

namespace {

constexpr std::size_t kNotOnPath = SIZE_MAX;

/// Canonical depth-first cycle enumeration. `on_cycle(path)` is called once per
/// cycle of length <= max_len (path[0] is the smallest vertex, path[1] <
/// path.back()); returning false stops the search. Returns false when stopped
/// by the callback, throws nothing; `steps` counts edge traversals and the
/// search also stops (returning false) once it exceeds `budget`.
template <typename OnCycle>
bool canonical_dfs(const Graph& g, std::size_t max_len, std::uint64_t budget, std::uint64_t& steps,
                   bool& budget_hit, OnCycle&& on_cycle) {
  const std::size_t n = g.order();
  std::vector<bool> on_path(n, false);
  std::vector<Vertex> path;
  std::vector<std::size_t> next;
  budget_hit = false;
  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    next.assign(1, 0);
    on_path[s] = true;
    while (!path.empty()) {
      Vertex h = path.back();
      auto nb = g.neighbors(h);
      std::size_t& i = next.back();
      if (i == 0 && path.size() >= 3 && path[1] < h && g.adjacent(h, s)) {
        if (!on_cycle(path)) return false;
      }
      bool advanced = false;
      while (i < nb.size()) {
        Vertex w = nb[i++];
        if (++steps > budget) {
          budget_hit = true;
          return false;
        }
        if (w <= s || on_path[w] || path.size() >= max_len) continue;
        on_path[w] = true;
        path.push_back(w);
        next.push_back(0);
        advanced = true;
        break;
      }
      if (!advanced) {
        on_path[path.back()] = false;
        path.pop_back();
        next.pop_back();
      }
    }
  }
  return true;
}

std::optional<CycleWitness> grow_paths(const Graph& g, const WindowQuery& q, std::uint64_t budget,
                                       std::uint64_t seed, std::uint64_t& steps) {
  const std::size_t n = g.order();
  if (n < 3) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> pos(n, kNotOnPath);
  std::vector<Vertex> path;
  std::vector<Vertex> candidates;

  while (steps < budget) {
    for (Vertex v : path) pos[v] = kNotOnPath;
    path.clear();
    Vertex start = static_cast<Vertex>(uniform_below(rng, n));
    path.push_back(start);
    pos[start] = 0;
    std::size_t stalls = 0;

    while (steps < budget) {
      Vertex h = path.back();
      candidates.clear();
      for (Vertex w : g.neighbors(h)) {
        ++steps;
        if (pos[w] == kNotOnPath) {
          candidates.push_back(w);
          continue;
        }
        std::size_t len = path.size() - pos[w];
        if (len >= 3 && len >= q.lo() && len <= q.hi()) {
          return CycleWitness{std::vector<Vertex>(path.begin() + static_cast<std::ptrdiff_t>(pos[w]),
                                                  path.end())};
        }
      }
      if (!candidates.empty()) {
        // Prefer the extension with the fewest free neighbours.
        std::size_t best_free = SIZE_MAX;
        std::vector<Vertex> best;
        for (Vertex w : candidates) {
          std::size_t free = 0;
          for (Vertex x : g.neighbors(w)) free += pos[x] == kNotOnPath ? 1 : 0;
          steps += g.degree(w);
          if (free < best_free) {
            best_free = free;
            best.assign(1, w);
          } else if (free == best_free) {
            best.push_back(w);
          }
        }
        Vertex w = best[uniform_below(rng, best.size())];
        pos[w] = path.size();
        path.push_back(w);
        stalls = 0;
        continue;
      }
      // Rotation: pick a path neighbour path[j] of the head, reverse the tail.
      if (++stalls > 4 * (path.size() + 8)) break;
      candidates.clear();
      for (Vertex w : g.neighbors(h)) {
        if (pos[w] + 2 < path.size()) candidates.push_back(w);
      }
      if (candidates.empty()) break;
      Vertex pivot = candidates[uniform_below(rng, candidates.size())];
      std::size_t j = pos[pivot];
      std::reverse(path.begin() + static_cast<std::ptrdiff_t>(j + 1), path.end());
      for (std::size_t i = j + 1; i < path.size(); ++i) pos[path[i]] = i;
      steps += path.size() - j;
    }
  }
  return std::nullopt;
}

}  // namespace

CycleSearchResult find_cycle_in_window(const Graph& g, const WindowQuery& q,
                                       const SearchOptions& options) {
  if (q.hi() < 3) {
    throw ContractViolation("window [" + std::to_string(q.lo()) + ", " + std::to_string(q.hi()) +
                            "] contains no admissible cycle length");
  }
  CycleSearchResult result;
  const bool small = g.order() <= options.exhaustive_threshold;
  if (!small) {
    auto found = grow_paths(g, q, options.budget / 2, options.seed, result.steps_used);
    if (found) {
      result.cycle = canonical(*found);
      if (!validate_cycle(g, *result.cycle)) throw InternalError("path growth produced an invalid cycle");
      return result;
    }
  }
  bool budget_hit = false;
  std::optional<CycleWitness> hit;
  bool completed = canonical_dfs(g, q.hi(), options.budget, result.steps_used, budget_hit,
                                 [&](const std::vector<Vertex>& path) {
                                   if (path.size() >= q.lo()) {
                                     hit = CycleWitness{path};
                                     return false;
                                   }
                                   return true;
                                 });
  if (hit) {
    result.cycle = canonical(*hit);
    if (!validate_cycle(g, *result.cycle)) throw InternalError("enumeration produced an invalid cycle");
    return result;
  }
  result.exhaustive = completed && !budget_hit;
  return result;
}

std::vector<std::size_t> enumerate_cycle_lengths(const Graph& g, std::optional<std::size_t> max_len,
                                                 std::uint64_t budget) {
  const std::size_t cap = std::min(max_len.value_or(g.order()), g.order());
  std::vector<bool> present(cap + 1, false);
  std::size_t distinct = 0;
  std::uint64_t steps = 0;
  bool budget_hit = false;
  canonical_dfs(g, cap, budget, steps, budget_hit, [&](const std::vector<Vertex>& path) {
    if (!present[path.size()]) {
      present[path.size()] = true;
      ++distinct;
    }
    // Every admissible length already seen: nothing left to learn.
    return distinct + 2 < cap + 1;
  });
  if (budget_hit) {
    throw BudgetExceeded("cycle enumeration exceeded " + std::to_string(budget) + " edge traversals");
  }
  std::vector<std::size_t> lengths;
  for (std::size_t len = 3; len <= cap; ++len) {
    if (present[len]) lengths.push_back(len);
  }
  return lengths;
}

SpectrumModK spectrum_mod_k(const Graph& g, std::uint64_t k, std::optional<std::size_t> max_len,
                            std::uint64_t budget) {
  if (k < 1) throw ContractViolation("spectrum modulus must be positive");
  SpectrumModK out;
  out.k = k;
  out.lengths = enumerate_cycle_lengths(g, max_len, budget);
  out.residues_present = ResidueSet(k);
  for (std::size_t len : out.lengths) out.residues_present.insert(len % k);
  return out;
}

}  // namespace modcyc
