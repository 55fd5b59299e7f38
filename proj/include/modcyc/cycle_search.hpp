#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "modcyc/graph.hpp"
#include "modcyc/residue.hpp"

namespace modcyc {

/// Target window [ell, ell + slack] for a cycle length.
struct WindowQuery {
  std::size_t ell = 3;
  std::size_t slack = 0;

  std::size_t lo() const { return ell; }
  std::size_t hi() const { return ell + slack; }
};

struct SearchOptions {
  /// Budget in edge traversals.
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 0;
  /// At or below this order the search is exhaustive from the start.
  std::size_t exhaustive_threshold = 20;
};

struct CycleSearchResult {
  std::optional<CycleWitness> cycle;
  /// Meaningful when no cycle was found: true means no cycle with a length in
  /// the window exists.
  bool exhaustive = false;
  std::uint64_t steps_used = 0;

  bool found() const { return cycle.has_value(); }
};

/// Looks for a cycle whose length lies in the query window. Large graphs are
/// first searched by randomised path growth with rotations, then by a
/// budgeted canonical depth-first enumeration; if the enumeration completes,
/// a miss is a proof of absence. Returned cycles are canonical and validated.
CycleSearchResult find_cycle_in_window(const Graph& g, const WindowQuery& q,
                                       const SearchOptions& options = {});

inline constexpr std::uint64_t kDefaultEnumerationBudget = 2'000'000'000;

/// Sorted distinct cycle lengths (only those <= max_len when given). Each cycle
/// is generated once, from its smallest vertex toward the smaller neighbour.
/// Throws BudgetExceeded after `budget` edge traversals.
std::vector<std::size_t> enumerate_cycle_lengths(const Graph& g,
                                                 std::optional<std::size_t> max_len = std::nullopt,
                                                 std::uint64_t budget = kDefaultEnumerationBudget);

struct SpectrumModK {
  std::uint64_t k = 1;
  ResidueSet residues_present;
  std::vector<std::size_t> lengths;
};

SpectrumModK spectrum_mod_k(const Graph& g, std::uint64_t k,
                            std::optional<std::size_t> max_len = std::nullopt,
                            std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace modcyc
