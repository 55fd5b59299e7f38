#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "modcyc/cycle_search.hpp"
#include "modcyc/expansion.hpp"
#include "modcyc/graph.hpp"
#include "modcyc/rational.hpp"
#include "modcyc/residue.hpp"

namespace modcyc {

enum class Mode { kStrict, kBestEffort };

const char* to_string(Mode m);
Mode parse_mode(const std::string& text);

/// Constants of the cycle-in-window lemma; never given numerically, so they are inputs.
struct LemmaConstants {
  Rational a1{2};
  Rational a2{1, 20};
  std::uint64_t A = 2;
  std::uint64_t N = 32;
};

struct ScheduleOverrides {
  LemmaConstants constants;
  /// Best-effort cycle lengths grow by min(D, d_cap) per step.
  std::uint64_t d_cap = 4;
};

struct ParameterSchedule {
  Rational alpha;
  std::uint64_t k = 0;
  std::uint64_t p = 0;
  Rational epsilon;
  Rational alpha_prime;
  LemmaConstants constants;
  std::uint64_t D = 0;
  /// Smallest n from which inequalities (1)-(3) hold; nullopt when beyond 2^62.
  std::optional<std::uint64_t> n0;
  long double n0_log10 = 0;
  Mode mode = Mode::kStrict;
  std::uint64_t d_cap = 4;
  std::vector<std::string> warnings;

  /// ceil(a1 ln n).
  std::uint64_t log_unit(std::uint64_t n) const;
  /// Target length l_i of the i-th cycle (i >= 1) for a graph of order n.
  std::uint64_t cycle_length(std::size_t i, std::uint64_t n) const;
  /// floor(eps^2 n / (4 eps + 2)), before any best-effort clamp.
  std::uint64_t reservoir_formula(std::uint64_t n) const;
  /// 2 ln n / ln(1 + eps): bound on internal vertices of each connecting path.
  long double path_interior_bound(std::uint64_t n) const;
};

/// Evaluates inequalities (1)-(3) at n exactly (integer floors, long double logarithms).
struct ScheduleInequalities {
  bool order = false;        // n >= 4N
  bool window = false;       // ceil(a1 ln n) D^{k+1} <= floor(a2 n / 4)
  bool reservoir = false;    // path and cycle budget fits in floor(eps^2 n / (4 eps + 2))
  bool all() const { return order && window && reservoir; }
};
ScheduleInequalities check_schedule_inequalities(const ParameterSchedule& s, std::uint64_t n);

/// Throws EvenKUnsupported / AlphaTooSmall in strict mode, ContractViolation for k < 2 or alpha <= 0.
ParameterSchedule make_schedule(const Rational& alpha, std::uint64_t k, Mode mode,
                                const ScheduleOverrides& overrides = {});

struct ChainOptions {
  std::uint64_t seed = 0;
  std::uint64_t search_budget = 20'000'000;
  CleanOptions clean;
  bool assert_invariants = true;
};

struct ChainState {
  ParameterSchedule schedule;
  VertexSet reservoir;
  VertexSet cleaned_away;  ///< S: removed by the first cleaning
  Graph reduced;           ///< G' = G - (R ∪ S), origins into G
  std::vector<CycleWitness> cycles;  ///< C_1..C_i
  std::vector<PathWitness> paths;    ///< P_1..P_i, P_j runs from v_{j-1} to u_j
  std::vector<Vertex> u;             ///< u_1..u_i
  std::vector<Vertex> v;             ///< v_0..v_{i-1}
  std::vector<Residue> z;            ///< z_1..z_{i-1}
  ResidueSet b;

  std::size_t t() const { return cycles.size(); }
  bool complete() const { return !b.empty() && is_full(b); }
  JunctionGeometry geometry(std::size_t i) const;  ///< C_i entered at u_i, 1-based
};

enum class FailureKind {
  kCleaningFailed,
  kPreconditionViolated,
  kCycleNotFound,
  kEmptyJunctionCandidates,
  kNotConnected,
  kReservoirEmpty,
  kInvariant,
};
const char* to_string(FailureKind k);

struct StepFailure {
  FailureKind kind;
  std::size_t step = 0;
  std::string detail;
};

using Trace = std::vector<nlohmann::json>;

/// Connected reservoir of floor(eps^2 n / (4 eps + 2)) vertices (at least 2 in best-effort mode).
VertexSet build_reservoir(const Graph& g, const ParameterSchedule& s);

/// One iteration: C_{i+1}, P_{i+1}, v_i, u_{i+1}, z_i. Requires !state.complete().
std::variant<ChainState, StepFailure> chain_step(const Graph& g, const ChainState& state,
                                                 const ChainOptions& options = {},
                                                 Trace* trace = nullptr);

struct ChainOutcome {
  /// The last state that satisfied every invariant (absent if initialisation failed).
  std::optional<ChainState> state;
  std::optional<StepFailure> failure;
  Trace trace;
};

/// Initialisation then chain_step until B is full. Strict mode throws
/// StrictModeRefused when n < n0.
ChainOutcome build_chain(const Graph& g, const ParameterSchedule& s, const ChainOptions& options = {});

/// Violations of the chain invariants; empty when all hold.
std::vector<std::string> chain_violations(const Graph& g, const ChainState& state);

/// Shortest path from V(C_t) to R avoiding path interiors and C_1..C_{t-1}.
std::variant<PathWitness, StepFailure> closing_path(const Graph& g, const ChainState& state);

/// Path inside g[R] from `from` to `to` (BFS restricted to R).
PathWitness reservoir_path(const Graph& g, const VertexSet& reservoir, Vertex from, Vertex to);

/// C(J) for J ⊆ {1..t-1} (1-based, any order). Validated; throws InternalError on breach.
CycleWitness assemble_cycle(const Graph& g, const ChainState& state, const PathWitness& closing,
                            const std::vector<std::size_t>& j);

/// l(Q_i^1) - l(Q_i^2) for 1 <= i < t.
std::int64_t arc_difference(const ChainState& state, std::size_t i);

/// Lexicographically smallest J ⊆ {1..z.size()} with sum of z_j ≡ target (mod k).
std::optional<std::vector<std::size_t>> subset_for_target(const std::vector<Residue>& z,
                                                          Residue target, std::uint64_t k);

struct ResidueEntry {
  Residue r = 0;
  std::optional<CycleWitness> cycle;
  std::vector<std::size_t> subset;
  std::string failure;
};

struct ResidueCycleReport {
  std::uint64_t k = 0;
  Mode mode = Mode::kBestEffort;
  std::optional<ParameterSchedule> schedule;
  std::vector<ResidueEntry> residues;
  std::optional<StepFailure> failure;
  std::optional<ChainState> chain;
  std::optional<PathWitness> closing;
  Trace trace;

  std::size_t found() const;
  bool all_found() const { return found() == residues.size(); }
};

/// make_schedule, build_chain, closing_path, then one validated C(J) per residue.
/// k = 1 returns any cycle. Strict mode reports every residue as failed when any step fails.
ResidueCycleReport cycles_all_residues(const Graph& g, const Rational& alpha, std::uint64_t k, Mode mode,
                                       const ChainOptions& options = {},
                                       const ScheduleOverrides& overrides = {});

}  // namespace modcyc
