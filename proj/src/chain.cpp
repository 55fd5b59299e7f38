#include "modcyc/chain.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "modcyc/errors.hpp"

namespace modcyc {

namespace {

Graph rooted(const Graph& g) {
  std::vector<Vertex> identity(g.order());
  std::iota(identity.begin(), identity.end(), Vertex{0});
  return g.with_origin(std::move(identity));
}

std::vector<Vertex> interior(const PathWitness& p) {
  if (p.vertices.size() <= 2) return {};
  return {p.vertices.begin() + 1, p.vertices.end() - 1};
}

void append(std::vector<Vertex>& to, const std::vector<Vertex>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

/// (V(P_1) ∩ V(G')) ∪ interiors of P_2..P_i ∪ V(C_1..C_{i-1}), in ids of g.
/// Vertices of P_1 outside G' are dropped later by localize.
std::vector<Vertex> kept_structure(const ChainState& state) {
  std::vector<Vertex> out = state.paths.front().vertices;
  for (std::size_t j = 1; j < state.paths.size(); ++j) append(out, interior(state.paths[j]));
  for (std::size_t j = 0; j + 1 < state.cycles.size(); ++j) append(out, state.cycles[j].vertices);
  return out;
}

nlohmann::json residues_json(const ResidueSet& b) { return b.members(); }

nlohmann::json failure_json(const StepFailure& f) {
  return {{"kind", to_string(f.kind)}, {"step", f.step}, {"detail", f.detail}};
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

CleanOptions cleaning_options(const ChainOptions& options, Mode mode) {
  CleanOptions c = options.clean;
  c.enforce_precondition = mode == Mode::kStrict;
  return c;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

bool contains_sorted(const std::vector<Vertex>& sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

/// Runs clean_after_deletion, mapping its honest failures to StepFailure.
std::variant<CleaningResult, StepFailure> clean(const Graph& g, const Rational& alpha, const Rational& beta,
                                                const VertexSet& x, const CleanOptions& options,
                                                std::size_t step, const char* what) {
  try {
    return clean_after_deletion(g, alpha, beta, x, options);
  } catch (const CleaningFailed& e) {
    return StepFailure{FailureKind::kCleaningFailed, step, std::string(what) + ": " + e.what()};
  } catch (const PreconditionViolated& e) {
    return StepFailure{FailureKind::kPreconditionViolated, step, std::string(what) + ": " + e.what()};
  }
}

}  // namespace

const char* to_string(FailureKind k) {
  switch (k) {
    case FailureKind::kCleaningFailed: return "CleaningFailed";
    case FailureKind::kPreconditionViolated: return "PreconditionViolated";
    case FailureKind::kCycleNotFound: return "CycleNotFound";
    case FailureKind::kEmptyJunctionCandidates: return "EmptyJunctionCandidates";
    case FailureKind::kNotConnected: return "NotConnected";
    case FailureKind::kReservoirEmpty: return "ReservoirEmpty";
    case FailureKind::kInvariant: return "InvariantViolated";
  }
  return "?";
}

JunctionGeometry ChainState::geometry(std::size_t i) const {
  if (i < 1 || i > cycles.size()) throw ContractViolation("cycle index out of range");
  return JunctionGeometry(cycles[i - 1], u[i - 1], Orientation::kForward);
}

VertexSet build_reservoir(const Graph& g, const ParameterSchedule& s) {
  std::uint64_t size = s.reservoir_formula(g.order());
  if (s.mode == Mode::kBestEffort) size = std::max<std::uint64_t>(size, 2);
  if (size == 0) {
    throw ContractViolation("n = " + std::to_string(g.order()) + " is too small for a non-empty reservoir");
  }
  if (size > g.order()) throw ContractViolation("reservoir larger than the graph");
  return connected_subset_of_size(g, size);
}

std::vector<std::string> chain_violations(const Graph& g, const ChainState& state) {
  std::vector<std::string> out;
  const auto& s = state.schedule;
  const std::size_t t = state.t();
  const std::size_t n = g.order();
  auto bad = [&](std::string msg) { out.push_back(std::move(msg)); };
  if (state.paths.size() != t || state.u.size() != t || state.v.size() != t ||
      state.z.size() + 1 != t) {
    bad("inconsistent chain lengths");
    return out;
  }

  // owner: 0 = free, 1 = reservoir, 2 + j = cycle j
  std::vector<std::size_t> owner(n, 0);
  for (Vertex r : state.reservoir) owner[r] = 1;
  std::vector<bool> in_reduced(n, false);
  for (Vertex w : state.reduced.origin()) in_reduced[w] = true;
  for (std::size_t j = 0; j < t; ++j) {
    const auto& c = state.cycles[j];
    if (!validate_cycle(g, c)) bad("C_" + std::to_string(j + 1) + " is not a cycle of g");
    const std::uint64_t lo = s.cycle_length(j + 1, n);
    if (c.length() < lo || c.length() > lo + s.constants.A) {
      bad("l(C_" + std::to_string(j + 1) + ") = " + std::to_string(c.length()) + " outside [" +
          std::to_string(lo) + ", " + std::to_string(lo + s.constants.A) + "]");
    }
    for (Vertex w : c.vertices) {
      if (w >= n) continue;
      if (owner[w] != 0) bad("C_" + std::to_string(j + 1) + " meets R or another cycle at " + std::to_string(w));
      if (!in_reduced[w]) bad("C_" + std::to_string(j + 1) + " leaves G' at " + std::to_string(w));
      owner[w] = 2 + j;
    }
  }

  std::vector<bool> on_path(n, false);
  const long double interior_bound = s.path_interior_bound(n);
  for (std::size_t j = 0; j < t; ++j) {
    const auto& p = state.paths[j];
    const std::string name = "P_" + std::to_string(j + 1);
    if (!validate_path(g, p) || p.vertices.empty()) {
      bad(name + " is not a path of g");
      continue;
    }
    if (p.front() != state.v[j] || p.back() != state.u[j]) bad(name + " has wrong endpoints");
    const std::size_t start_owner = j == 0 ? 1 : 2 + (j - 1);
    if (owner[p.front()] != start_owner) bad(name + " does not start on " + (j == 0 ? "R" : "C_" + std::to_string(j)));
    if (owner[p.back()] != 2 + j) bad(name + " does not end on C_" + std::to_string(j + 1));
    for (Vertex w : interior(p)) {
      if (owner[w] != 0) bad(name + " meets a cycle or R internally at " + std::to_string(w));
      if (j >= 1 && !in_reduced[w]) bad(name + " leaves G' at " + std::to_string(w));
    }
    for (Vertex w : p.vertices) {
      if (on_path[w]) bad(name + " meets an earlier path at " + std::to_string(w));
      on_path[w] = true;
    }
    if (s.mode == Mode::kStrict && static_cast<long double>(interior(p).size()) > interior_bound) {
      bad(name + " has " + std::to_string(interior(p).size()) + " internal vertices");
    }
  }

  ResidueSet sums(s.k, {0});
  for (std::size_t j = 0; j + 1 < t; ++j) {
    if (state.u[j] == state.v[j + 1]) bad("u_" + std::to_string(j + 1) + " = v_" + std::to_string(j + 1));
    const Residue z = diff_along_cycle(state.geometry(j + 1), state.v[j + 1], s.k);
    if (z != state.z[j]) bad("z_" + std::to_string(j + 1) + " disagrees with diff(v)");
    sums = extend_by_element(sums, state.z[j]);
  }
  if (!(sums == state.b)) bad("B is not the subset-sum set of z");
  if (state.b.size() < t) bad("|B| = " + std::to_string(state.b.size()) + " < t = " + std::to_string(t));
  return out;
}

std::variant<ChainState, StepFailure> chain_step(const Graph& g, const ChainState& state,
                                                 const ChainOptions& options, Trace* trace) {
  if (state.t() == 0) throw ContractViolation("chain_step needs an initialised chain");
  if (state.complete()) throw ContractViolation("chain_step called on a complete chain");
  const auto& s = state.schedule;
  const std::size_t i = state.t();
  const std::size_t n = g.order();
  const Graph& gp = state.reduced;
  const CleanOptions copts = cleaning_options(options, s.mode);

  auto fail = [&](FailureKind kind, std::string detail) -> StepFailure {
    StepFailure f{kind, i + 1, std::move(detail)};
    if (trace) {
      trace->push_back({{"kind", "failure"}, {"step", i + 1}, {"B", residues_json(state.b)},
                        {"failure", failure_json(f)}});
    }
    return f;
  };

  // (a), (b): X_i and Y_i
  const std::vector<Vertex> kept = kept_structure(state);
  std::vector<Vertex> x_i = kept;
  append(x_i, state.cycles.back().vertices);
  auto first = clean(gp, s.alpha_prime, s.epsilon, localize(gp, x_i), copts, i + 1, "Y_i");
  if (auto* f = std::get_if<StepFailure>(&first)) return fail(f->kind, f->detail);
  const CleaningResult& y_i = std::get<CleaningResult>(first);

  // (c): C_{i+1}
  const std::uint64_t ell = s.cycle_length(i + 1, n);
  SearchOptions search{options.search_budget, mix_seed(options.seed, i + 1)};
  auto found = find_cycle_in_window(y_i.cleaned, {ell, s.constants.A}, search);
  if (!found.found()) {
    return fail(FailureKind::kCycleNotFound,
                "no cycle with length in [" + std::to_string(ell) + ", " + std::to_string(ell + s.constants.A) +
                    "] in G' - (X_i ∪ Y_i) (order " + std::to_string(y_i.cleaned.order()) + ", " +
                    (found.exhaustive ? "exhaustive" : "budget spent") + ")");
  }
  const CycleWitness next = canonical(lift(y_i.cleaned, *found.cycle));

  // (d): bad vertices K, then X_i' and Y_i'
  const JunctionGeometry geo = state.geometry(i);
  const ResidueSet stab = stabilizer(state.b);
  const std::vector<Vertex> bad = bad_vertex_set(geo, stab, s.k);
  const std::size_t cycle_len = state.cycles.back().length();
  if (s.k % 2 == 1 && bad.size() * s.p > cycle_len + s.p) {
    return fail(FailureKind::kInvariant, "|K| = " + std::to_string(bad.size()) + " exceeds |V(C_i)|/p + 1");
  }
  std::vector<Vertex> x_i2 = kept;
  append(x_i2, bad);
  x_i2.push_back(state.u.back());
  auto second = clean(gp, s.alpha_prime, s.epsilon, localize(gp, x_i2), copts, i + 1, "Y_i'");
  if (auto* f = std::get_if<StepFailure>(&second)) return fail(f->kind, f->detail);
  const CleaningResult& y_i2 = std::get<CleaningResult>(second);

  // (e): P_{i+1}
  const Graph& h = y_i2.cleaned;
  const VertexSet from = localize(h, state.cycles.back().vertices);
  const VertexSet to = localize(h, next.vertices);
  if (from.empty() || to.empty()) {
    return fail(FailureKind::kEmptyJunctionCandidates,
                std::string(from.empty() ? "V(C_i)" : "V(C_{i+1})") + " is covered by X_i' ∪ Y_i'");
  }
  auto link = shortest_path_between_sets(h, from, to);
  if (!link) {
    return fail(FailureKind::kNotConnected, "C_i and C_{i+1} are disconnected in G' - (X_i' ∪ Y_i')");
  }
  const PathWitness path = lift(h, *link);
  const Vertex v_i = path.front();

  // (f): z_i and B_{i+1}
  const Residue z_i = diff_along_cycle(geo, v_i, s.k);
  if (v_i == state.u.back() || contains_sorted(bad, v_i) || stab.contains(z_i)) {
    throw InternalError("junction v_i = " + std::to_string(v_i) + " lies in K ∪ {u_i}");
  }
  ChainState out = state;
  out.cycles.push_back(next);
  out.paths.push_back(path);
  out.v.push_back(v_i);
  out.u.push_back(path.back());
  out.z.push_back(z_i);
  out.b = extend_by_element(state.b, z_i);
  if (out.b.size() < i + 1) throw InternalError("B did not grow");

  if (options.assert_invariants) {
    auto violations = chain_violations(g, out);
    if (!violations.empty()) return fail(FailureKind::kInvariant, join(violations));
  }
  if (trace) {
    trace->push_back({{"kind", "step"},
                      {"step", i + 1},
                      {"sizes",
                       {{"X", x_i.size()},
                        {"Y", y_i.y.size()},
                        {"K", bad.size()},
                        {"X_prime", x_i2.size()},
                        {"Y_prime", y_i2.y.size()},
                        {"cycle", next.length()},
                        {"path", path.length()},
                        {"target_length", ell}}},
                      {"certified_cleaning", y_i.certified && y_i2.certified},
                      {"z", z_i},
                      {"stabilizer", residues_json(stab)},
                      {"B", residues_json(out.b)}});
  }
  return out;
}

ChainOutcome build_chain(const Graph& input, const ParameterSchedule& s, const ChainOptions& options) {
  const Graph g = rooted(input);
  const std::size_t n = g.order();
  if (s.mode == Mode::kStrict && (!s.n0 || n < *s.n0)) {
    std::ostringstream msg;
    msg << "strict mode needs n >= n0; n = " << n << ", n0 "
        << (s.n0 ? "= " + std::to_string(*s.n0) : "> 2^62") << " (log10 n0 ~ " << static_cast<double>(s.n0_log10)
        << ")";
    throw StrictModeRefused(msg.str());
  }
  ChainOutcome out;
  auto fail = [&](FailureKind kind, std::string detail) {
    StepFailure f{kind, 1, std::move(detail)};
    out.trace.push_back({{"kind", "failure"}, {"step", 1}, {"failure", failure_json(f)}});
    out.failure = f;
    return out;
  };
  if (!is_connected(g)) return fail(FailureKind::kNotConnected, "input graph is disconnected");

  VertexSet reservoir;
  try {
    reservoir = build_reservoir(g, s);
  } catch (const ContractViolation& e) {
    return fail(FailureKind::kReservoirEmpty, e.what());
  }

  auto first = clean(g, s.alpha, s.alpha_prime, reservoir, cleaning_options(options, s.mode), 1, "S");
  if (auto* f = std::get_if<StepFailure>(&first)) return fail(f->kind, f->detail);
  const CleaningResult& cleaned = std::get<CleaningResult>(first);

  ChainState state;
  state.schedule = s;
  state.reservoir = reservoir;
  state.cleaned_away = cleaned.y;
  state.reduced = cleaned.cleaned;

  const std::uint64_t ell = s.cycle_length(1, n);
  SearchOptions search{options.search_budget, mix_seed(options.seed, 0)};
  auto found = find_cycle_in_window(state.reduced, {ell, s.constants.A}, search);
  if (!found.found()) {
    return fail(FailureKind::kCycleNotFound,
                "no cycle with length in [" + std::to_string(ell) + ", " + std::to_string(ell + s.constants.A) +
                    "] in G' (order " + std::to_string(state.reduced.order()) + ", " +
                    (found.exhaustive ? "exhaustive" : "budget spent") + ")");
  }
  const CycleWitness c1 = canonical(lift(state.reduced, *found.cycle));
  auto p1 = shortest_path_between_sets(g, reservoir, VertexSet(n, c1.vertices));
  if (!p1) return fail(FailureKind::kNotConnected, "no path from R to C_1");

  state.cycles.push_back(c1);
  state.paths.push_back(*p1);
  state.v.push_back(p1->front());
  state.u.push_back(p1->back());
  state.b = ResidueSet(s.k, {0});
  if (options.assert_invariants) {
    auto violations = chain_violations(g, state);
    if (!violations.empty()) return fail(FailureKind::kInvariant, join(violations));
  }
  out.trace.push_back({{"kind", "init"},
                       {"step", 1},
                       {"sizes",
                        {{"n", n},
                         {"R", reservoir.size()},
                         {"S", cleaned.y.size()},
                         {"G_prime", state.reduced.order()},
                         {"cycle", c1.length()},
                         {"path", p1->length()},
                         {"target_length", ell}}},
                       {"certified_cleaning", cleaned.certified},
                       {"v0", state.v.front()},
                       {"B", residues_json(state.b)}});

  while (!state.complete()) {
    if (state.t() >= s.k) throw InternalError("chain exceeded k cycles without filling Z_k");
    auto next = chain_step(g, state, options, &out.trace);
    if (auto* f = std::get_if<StepFailure>(&next)) {
      out.failure = *f;
      break;
    }
    state = std::get<ChainState>(std::move(next));
  }
  out.state = std::move(state);
  return out;
}

std::variant<PathWitness, StepFailure> closing_path(const Graph& g, const ChainState& state) {
  const std::size_t n = g.order();
  const std::size_t t = state.t();
  if (t == 0) throw ContractViolation("closing_path needs a non-empty chain");
  std::vector<Vertex> avoid;
  for (const auto& p : state.paths) append(avoid, interior(p));
  for (std::size_t j = 0; j + 1 < t; ++j) append(avoid, state.cycles[j].vertices);
  const VertexSet last(n, state.cycles.back().vertices);
  auto p = shortest_path_between_sets(g, last, state.reservoir, VertexSet(n, avoid));
  if (!p) {
    return StepFailure{FailureKind::kNotConnected, t + 1, "no path from C_t to R avoiding the chain"};
  }
  std::size_t on_last = 0, on_reservoir = 0;
  for (Vertex w : p->vertices) {
    on_last += last.contains(w) ? 1 : 0;
    on_reservoir += state.reservoir.contains(w) ? 1 : 0;
  }
  if (!validate_path(g, *p) || on_last != 1 || on_reservoir != 1 || !last.contains(p->front()) ||
      !state.reservoir.contains(p->back())) {
    throw InternalError("closing path breaks its contract");
  }
  return *p;
}

PathWitness reservoir_path(const Graph& g, const VertexSet& reservoir, Vertex from, Vertex to) {
  if (!reservoir.contains(from) || !reservoir.contains(to)) throw ContractViolation("endpoints outside R");
  if (from == to) return PathWitness{{from}};
  auto p = shortest_path_between_sets(g, VertexSet(g.order(), {from}), VertexSet(g.order(), {to}),
                                      reservoir.complement());
  if (!p) throw InternalError("reservoir does not induce a connected subgraph");
  return *p;
}

std::int64_t arc_difference(const ChainState& state, std::size_t i) {
  if (i < 1 || i + 1 > state.t()) throw ContractViolation("arc index out of range");
  const auto geo = state.geometry(i);
  const auto forward = static_cast<std::int64_t>(geo.arc_length(state.v[i]));
  const auto len = static_cast<std::int64_t>(state.cycles[i - 1].length());
  return forward - (len - forward);
}

CycleWitness assemble_cycle(const Graph& g, const ChainState& state, const PathWitness& closing,
                            const std::vector<std::size_t>& j) {
  const std::size_t t = state.t();
  std::vector<bool> chosen(t, false);
  for (std::size_t idx : j) {
    if (idx < 1 || idx >= t) throw ContractViolation("J must be a subset of {1, ..., t-1}");
    chosen[idx] = true;
  }
  std::vector<Vertex> walk;
  auto extend = [&](const std::vector<Vertex>& part) {
    if (part.empty()) throw InternalError("empty segment");
    if (walk.empty()) {
      walk = part;
      return;
    }
    if (part.front() != walk.back()) throw InternalError("segments do not meet");
    walk.insert(walk.end(), part.begin() + 1, part.end());
  };
  extend(state.paths[0].vertices);
  for (std::size_t i = 1; i < t; ++i) {
    const auto geo = state.geometry(i);
    extend(chosen[i] ? geo.arc(state.v[i]).vertices : geo.reversed().arc(state.v[i]).vertices);
    extend(state.paths[i].vertices);
  }
  const Vertex x = closing.front();
  if (x == state.u.back()) {
    extend({x});
  } else {
    extend(state.geometry(t).arc(x).vertices);
  }
  extend(closing.vertices);
  extend(reservoir_path(g, state.reservoir, closing.back(), state.v.front()).vertices);
  if (walk.back() != walk.front()) throw InternalError("assembled walk is not closed");
  walk.pop_back();
  CycleWitness c{std::move(walk)};
  if (!validate_cycle(g, c)) throw InternalError("assembled C(J) is not a simple cycle of g");
  return c;
}

std::optional<std::vector<std::size_t>> subset_for_target(const std::vector<Residue>& z, Residue target,
                                                          std::uint64_t k) {
  if (k == 0) throw ContractViolation("modulus must be positive");
  target %= k;
  const std::size_t m = z.size();
  // reach[j]: sums of subsets of z_{j+1}..z_m (0-based suffixes).
  std::vector<ResidueSet> reach(m + 1);
  reach[m] = ResidueSet(k, {0});
  for (std::size_t j = m; j-- > 0;) reach[j] = extend_by_element(reach[j + 1], z[j] % k);
  if (!reach[0].contains(target)) return std::nullopt;
  std::vector<std::size_t> out;
  Residue rest = target;
  std::size_t pos = 0;
  while (rest != 0) {
    std::size_t j = pos;
    while (!reach[j + 1].contains((rest + k - z[j] % k) % k)) ++j;
    out.push_back(j + 1);
    rest = (rest + k - z[j] % k) % k;
    pos = j + 1;
  }
  return out;
}

std::size_t ResidueCycleReport::found() const {
  return static_cast<std::size_t>(
      std::count_if(residues.begin(), residues.end(), [](const ResidueEntry& e) { return e.cycle.has_value(); }));
}

ResidueCycleReport cycles_all_residues(const Graph& input, const Rational& alpha, std::uint64_t k, Mode mode,
                                       const ChainOptions& options, const ScheduleOverrides& overrides) {
  if (k == 0) throw ContractViolation("k must be positive");
  const Graph g = rooted(input);
  ResidueCycleReport report;
  report.k = k;
  report.mode = mode;

  if (k == 1) {
    ResidueEntry entry;
    if (g.order() >= 3) {
      auto found = find_cycle_in_window(g, {3, g.order() - 3}, {options.search_budget, options.seed});
      entry.cycle = found.cycle;
    }
    if (!entry.cycle) entry.failure = "no cycle found";
    report.residues.push_back(entry);
    return report;
  }

  report.schedule = make_schedule(alpha, k, mode, overrides);
  auto outcome = build_chain(g, *report.schedule, options);
  report.trace = std::move(outcome.trace);
  report.failure = outcome.failure;
  report.chain = outcome.state;

  auto mark_all = [&](const std::string& why) {
    report.residues.clear();
    for (Residue r = 0; r < k; ++r) report.residues.push_back({r, std::nullopt, {}, why});
    return report;
  };
  if (!report.chain) return mark_all("chain initialisation failed: " + report.failure->detail);
  if (mode == Mode::kStrict && report.failure) return mark_all("strict chain failed: " + report.failure->detail);

  const ChainState& state = *report.chain;
  auto closing = closing_path(g, state);
  if (auto* f = std::get_if<StepFailure>(&closing)) {
    report.trace.push_back({{"kind", "failure"}, {"step", f->step}, {"failure", failure_json(*f)}});
    if (!report.failure) report.failure = *f;
    return mark_all("closing path failed: " + f->detail);
  }
  report.closing = std::get<PathWitness>(closing);

  const CycleWitness base = assemble_cycle(g, state, *report.closing, {});
  const Residue base_residue = base.length() % k;
  for (Residue r = 0; r < k; ++r) {
    ResidueEntry entry;
    entry.r = r;
    auto subset = subset_for_target(state.z, (r + k - base_residue) % k, k);
    if (!subset) {
      entry.failure = "residue not in l(C(∅)) + B_t";
      if (report.failure) entry.failure += " (chain stopped: " + std::string(to_string(report.failure->kind)) + ")";
    } else {
      CycleWitness c = assemble_cycle(g, state, *report.closing, *subset);
      if (c.length() % k != r) throw InternalError("assembled cycle has the wrong residue");
      entry.cycle = std::move(c);
      entry.subset = std::move(*subset);
    }
    report.residues.push_back(std::move(entry));
  }
  report.trace.push_back({{"kind", "close"},
                          {"step", state.t() + 1},
                          {"sizes", {{"closing_path", report.closing->length()}, {"base_cycle", base.length()}}},
                          {"B", residues_json(state.b)},
                          {"found", report.found()}});
  return report;
}

}  // namespace modcyc
