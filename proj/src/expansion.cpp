#include "modcyc/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "modcyc/errors.hpp"

namespace modcyc {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kCertifiedExpander: return "CertifiedExpander";
    case Verdict::kRefutedWithWitness: return "RefutedWithWitness";
    case Verdict::kLowerBoundOnly: return "LowerBoundOnly";
  }
  return "?";
}

const char* to_string(CertificationMethod m) {
  return m == CertificationMethod::kExact ? "exact" : "spectral";
}

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxExactOrder = 40;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) adj[v] |= Mask{1} << w;
  }
  return adj;
}

VertexSet to_set(Mask m, std::size_t n) {
  VertexSet s(n);
  for (; m != 0; m &= m - 1) s.insert(static_cast<Vertex>(std::countr_zero(m)));
  return s;
}

/// Depth-first enumeration of every non-empty subset of `allowed` with at most
/// `max_size` members. `visit(set, neighbourhood_or)` returns false to stop.
template <typename Visit>
bool enumerate_subsets(const std::vector<Mask>& adj, Mask allowed, std::size_t max_size,
                       Visit&& visit) {
  std::vector<Vertex> pool;
  for (Mask m = allowed; m != 0; m &= m - 1) pool.push_back(static_cast<Vertex>(std::countr_zero(m)));
  struct Frame {
    std::size_t next;
    Mask set;
    Mask nb;
    std::size_t size;
  };
  std::vector<Frame> stack{{0, 0, 0, 0}};
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next >= pool.size() || top.size >= max_size) {
      stack.pop_back();
      continue;
    }
    Vertex v = pool[top.next++];
    Frame child{top.next, top.set | (Mask{1} << v), top.nb | adj[v], top.size + 1};
    if (!visit(child.set, child.nb)) return false;
    stack.push_back(child);
  }
  return true;
}

void require_exact_size(const Graph& g, std::size_t threshold) {
  if (g.order() > threshold || g.order() > kMaxExactOrder) {
    throw ExactModeTooLarge("exact expansion check refused: n = " + std::to_string(g.order()) +
                            " exceeds threshold " + std::to_string(std::min(threshold, kMaxExactOrder)));
  }
}

}  // namespace

ExpansionReport certify_exact(const Graph& g, const Rational& alpha, std::size_t threshold) {
  require_exact_size(g, threshold);
  const std::size_t n = g.order();
  auto adj = adjacency_masks(g);
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  ExpansionReport report;
  report.alpha_target = alpha;
  report.method = CertificationMethod::kExact;
  std::optional<Mask> witness;
  enumerate_subsets(adj, all, n / 2, [&](Mask set, Mask nb) {
    auto boundary = static_cast<std::int64_t>(std::popcount(nb & ~set));
    auto size = static_cast<std::int64_t>(std::popcount(set));
    if (below_ratio(boundary, alpha, size)) {
      witness = set;
      return false;
    }
    return true;
  });
  if (witness) {
    report.verdict = Verdict::kRefutedWithWitness;
    report.witness = to_set(*witness, n);
  } else {
    report.verdict = Verdict::kCertifiedExpander;
  }
  return report;
}

std::optional<ExpansionRatio> exact_expansion_ratio(const Graph& g, std::size_t threshold) {
  require_exact_size(g, threshold);
  const std::size_t n = g.order();
  if (n < 2) return std::nullopt;
  auto adj = adjacency_masks(g);
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::int64_t best_num = -1, best_den = 1;
  Mask best_set = 0;
  enumerate_subsets(adj, all, n / 2, [&](Mask set, Mask nb) {
    auto boundary = static_cast<std::int64_t>(std::popcount(nb & ~set));
    auto size = static_cast<std::int64_t>(std::popcount(set));
    if (best_num < 0 || boundary * best_den < best_num * size) {
      best_num = boundary;
      best_den = size;
      best_set = set;
    }
    return true;
  });
  return ExpansionRatio{Rational(best_num, best_den), to_set(best_set, n)};
}

Rational removal_fraction(const Rational& alpha, const Rational& beta) {
  Rational gap = alpha - beta;
  return gap * gap / (Rational(4) * gap + Rational(2));
}

namespace {

/// Largest Z ⊆ alive, |Z| <= max_size, with |N_alive(Z)| < beta |Z|.
std::optional<Mask> largest_violating_set(const std::vector<Mask>& adj, Mask alive,
                                          std::size_t max_size, const Rational& beta) {
  std::optional<Mask> best;
  int best_size = 0;
  enumerate_subsets(adj, alive, max_size, [&](Mask set, Mask nb) {
    auto boundary = static_cast<std::int64_t>(std::popcount(nb & ~set & alive));
    int size = std::popcount(set);
    if (size > best_size && below_ratio(boundary, beta, size)) {
      best = set;
      best_size = size;
    }
    return true;
  });
  return best;
}

/// Violating sets in g restricted to `alive`, found by components and greedy growth.
std::vector<Vertex> heuristic_violating_set(const Graph& g, const std::vector<bool>& alive,
                                            std::size_t max_size, const Rational& beta,
                                            const CleanOptions& options) {
  const std::size_t n = g.order();
  // Components other than the largest have no boundary at all.
  std::vector<std::size_t> comp(n, SIZE_MAX);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s = 0; s < n; ++s) {
    if (!alive[s] || comp[s] != SIZE_MAX) continue;
    comps.emplace_back();
    auto& members = comps.back();
    comp[s] = comps.size() - 1;
    members.push_back(s);
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Vertex w : g.neighbors(members[head])) {
        if (alive[w] && comp[w] == SIZE_MAX) {
          comp[w] = comps.size() - 1;
          members.push_back(w);
        }
      }
    }
  }
  if (comps.size() > 1) {
    std::size_t largest = 0;
    for (std::size_t c = 1; c < comps.size(); ++c) {
      if (comps[c].size() > comps[largest].size()) largest = c;
    }
    std::vector<Vertex> out;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (c != largest && comps[c].size() <= max_size) {
        out.insert(out.end(), comps[c].begin(), comps[c].end());
      }
    }
    if (!out.empty() && out.size() <= max_size) return out;
    if (!out.empty()) {
      for (std::size_t c = 0; c < comps.size(); ++c) {
        if (c != largest && comps[c].size() <= max_size) return comps[c];
      }
    }
  }

  // Greedy growth from weakly attached vertices.
  std::vector<std::uint8_t> state(n, 0);  // 1 = in Z, 2 = in N(Z)
  for (Vertex seed = 0; seed < n; ++seed) {
    if (!alive[seed]) continue;
    std::size_t live_degree = 0;
    for (Vertex w : g.neighbors(seed)) live_degree += alive[w] ? 1 : 0;
    if (live_degree > options.seed_degree) continue;

    std::vector<Vertex> z{seed};
    std::vector<Vertex> boundary;
    state[seed] = 1;
    for (Vertex w : g.neighbors(seed)) {
      if (alive[w]) {
        state[w] = 2;
        boundary.push_back(w);
      }
    }
    std::size_t best_prefix = 0;
    const std::size_t cap = std::min(options.greedy_max_size, max_size);
    while (true) {
      if (below_ratio(static_cast<std::int64_t>(boundary.size()), beta,
                      static_cast<std::int64_t>(z.size()))) {
        best_prefix = z.size();
      }
      if (z.size() >= cap || boundary.empty()) break;
      // Add the boundary vertex that grows the boundary least.
      std::size_t pick = 0;
      std::int64_t pick_gain = INT64_MAX;
      for (std::size_t i = 0; i < boundary.size(); ++i) {
        std::int64_t gain = -1;
        for (Vertex w : g.neighbors(boundary[i])) {
          if (alive[w] && state[w] == 0) ++gain;
        }
        if (gain < pick_gain || (gain == pick_gain && boundary[i] < boundary[pick])) {
          pick = i;
          pick_gain = gain;
        }
      }
      Vertex v = boundary[pick];
      boundary.erase(boundary.begin() + static_cast<std::ptrdiff_t>(pick));
      state[v] = 1;
      z.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (alive[w] && state[w] == 0) {
          state[w] = 2;
          boundary.push_back(w);
        }
      }
    }
    for (Vertex v : z) state[v] = 0;
    for (Vertex v : boundary) state[v] = 0;
    if (best_prefix > 0) {
      z.resize(best_prefix);
      return z;
    }
  }
  return {};
}

}  // namespace

CleaningResult clean_after_deletion(const Graph& g, const Rational& alpha, const Rational& beta,
                                    const VertexSet& x, const CleanOptions& options) {
  if (!(Rational(0) < beta) || !(beta < alpha)) {
    throw ContractViolation("clean_after_deletion requires 0 < beta < alpha, got beta = " +
                            beta.to_string() + ", alpha = " + alpha.to_string());
  }
  if (x.universe() != g.order()) throw ContractViolation("deletion set over a different graph");
  const std::size_t n = g.order();
  const auto n64 = static_cast<std::int64_t>(n);
  if (options.enforce_precondition) {
    Rational fraction = removal_fraction(alpha, beta);
    if (Rational(static_cast<std::int64_t>(x.size())) > fraction * Rational(n64)) {
      throw PreconditionViolated("|X| = " + std::to_string(x.size()) + " exceeds (" +
                                 fraction.to_string() + ") * n = " +
                                 (fraction * Rational(n64)).to_string());
    }
  }
  const std::size_t half = n / 2;
  VertexSet y(n);
  std::size_t rounds = 0;
  const bool exact = n <= options.exact_threshold && n <= kMaxExactOrder;

  if (exact) {
    auto adj = adjacency_masks(g);
    Mask alive = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!x.contains(v)) alive |= Mask{1} << v;
    }
    // Stop once the remainder expands relative to its own order; otherwise
    // remove a largest violating set of size up to n/2.
    while (largest_violating_set(adj, alive, static_cast<std::size_t>(std::popcount(alive)) / 2, beta)) {
      auto z = largest_violating_set(adj, alive, half, beta);
      ++rounds;
      alive &= ~*z;
      for (Mask m = *z; m != 0; m &= m - 1) y.insert(static_cast<Vertex>(std::countr_zero(m)));
    }
  } else {
    std::vector<bool> alive(n, true);
    for (Vertex v : x) alive[v] = false;
    std::size_t alive_count = n - x.size();
    while (true) {
      auto z = heuristic_violating_set(g, alive, alive_count / 2, beta, options);
      if (z.empty()) break;
      ++rounds;
      for (Vertex v : z) {
        alive[v] = false;
        y.insert(v);
      }
      alive_count -= z.size();
      if (y.size() > half) break;
    }
  }

  // |Y| < |X| / (alpha - beta)
  Rational gap = alpha - beta;
  if (!y.empty() && !(Rational(static_cast<std::int64_t>(y.size())) * gap <
                      Rational(static_cast<std::int64_t>(x.size())))) {
    throw CleaningFailed("cleaning removed |Y| = " + std::to_string(y.size()) + " vertices for |X| = " +
                         std::to_string(x.size()) + ", breaching |Y| < |X|/(alpha-beta) with alpha-beta = " +
                         gap.to_string() + "; the graph is not " + alpha.to_string() + "-expanding");
  }
  CleaningResult result;
  result.cleaned = remove_vertices(g, x.united(y));
  result.y = std::move(y);
  result.beta = beta;
  result.certified = exact;
  result.rounds = rounds;
  return result;
}

std::size_t diameter_upper_bound(std::size_t n, const Rational& alpha) {
  if (n < 2) throw ContractViolation("diameter bound needs n >= 2");
  if (!(Rational(0) < alpha)) throw ContractViolation("diameter bound needs alpha > 0");
  long double value = 2.0L * (std::log(static_cast<long double>(n)) - 1.0L) /
                      std::log1p(alpha.to_long_double());
  long double c = std::ceil(value);
  return c < 1.0L ? 1 : static_cast<std::size_t>(c);
}

}  // namespace modcyc
