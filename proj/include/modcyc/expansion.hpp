#pragma once

#include <cstddef>
#include <optional>

#include "modcyc/graph.hpp"
#include "modcyc/rational.hpp"

namespace modcyc {

enum class Verdict { kCertifiedExpander, kRefutedWithWitness, kLowerBoundOnly };
enum class CertificationMethod { kExact, kSpectral };

const char* to_string(Verdict v);
const char* to_string(CertificationMethod m);

struct ExpansionReport {
  Rational alpha_target;
  Verdict verdict = Verdict::kLowerBoundOnly;
  /// Violating set: |N(X)| < alpha |X| and |X| <= n/2.
  std::optional<VertexSet> witness;
  std::optional<double> spectral_bound;
  std::optional<double> spectral_tolerance;
  CertificationMethod method = CertificationMethod::kExact;
};

inline constexpr std::size_t kDefaultExactThreshold = 20;

/// Exhaustive check of every non-empty X with |X| <= floor(n/2).
/// Throws ExactModeTooLarge when n exceeds `threshold`.
ExpansionReport certify_exact(const Graph& g, const Rational& alpha,
                              std::size_t threshold = kDefaultExactThreshold);

/// The largest alpha for which g is alpha-expanding: min |N(X)|/|X| over
/// non-empty |X| <= n/2, together with a minimising set. nullopt for n < 2.
struct ExpansionRatio {
  Rational ratio;
  VertexSet minimizer;
};
std::optional<ExpansionRatio> exact_expansion_ratio(const Graph& g,
                                                    std::size_t threshold = kDefaultExactThreshold);

struct CleaningResult {
  VertexSet y;
  Graph cleaned;  ///< g - (x ∪ y), origins composed
  Rational beta;
  /// True when beta-expansion of `cleaned` was verified exhaustively.
  bool certified = false;
  std::size_t rounds = 0;
};

struct CleanOptions {
  std::size_t exact_threshold = kDefaultExactThreshold;
  /// Reject x larger than (alpha-beta)^2 / (4(alpha-beta)+2) * n.
  bool enforce_precondition = true;
  /// Heuristic mode (n above the threshold): greedy sets grow up to this size
  /// from seeds whose remaining degree is at most `seed_degree`.
  std::size_t greedy_max_size = 32;
  std::size_t seed_degree = 2;
};

/// Finds Y disjoint from X with |Y| < |X|/(alpha-beta) such that G-(X ∪ Y) is
/// beta-expanding, by repeatedly removing violating sets (|N(Z)| < beta |Z|,
/// |Z| <= n/2 for the original n) until none is left.
///
/// Small graphs use exhaustive search and always pick a largest violating set;
/// larger graphs use component and greedy-growth heuristics and the result is
/// reported with certified = false. Throws PreconditionViolated or CleaningFailed.
CleaningResult clean_after_deletion(const Graph& g, const Rational& alpha, const Rational& beta,
                                    const VertexSet& x, const CleanOptions& options = {});

/// (alpha-beta)^2 / (4(alpha-beta)+2): admissible |X|/n for the removal lemma.
Rational removal_fraction(const Rational& alpha, const Rational& beta);

/// ceil(2(ln n - 1)/ln(1 + alpha)), clamped to at least 1.
std::size_t diameter_upper_bound(std::size_t n, const Rational& alpha);

}  // namespace modcyc
