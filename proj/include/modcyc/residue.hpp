#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "modcyc/graph.hpp"

namespace modcyc {

using Residue = std::uint64_t;

/// Subset of Z_k stored as a bitset.
class ResidueSet {
 public:
  ResidueSet() = default;
  explicit ResidueSet(std::uint64_t k);
  ResidueSet(std::uint64_t k, std::span<const Residue> members);
  ResidueSet(std::uint64_t k, std::initializer_list<Residue> members)
      : ResidueSet(k, std::span<const Residue>(members.begin(), members.size())) {}

  static ResidueSet full(std::uint64_t k);

  std::uint64_t modulus() const { return k_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(Residue r) const { return r < k_ && ((bits_[r >> 6] >> (r & 63)) & 1U); }
  void insert(Residue r);

  /// B + z = { b + z mod k }.
  ResidueSet translated(Residue z) const;
  ResidueSet united(const ResidueSet& other) const;

  /// Members in increasing order.
  std::vector<Residue> members() const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  std::uint64_t k_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// B ∪ (B + z): the subset sums after appending z to the list of summands.
ResidueSet extend_by_element(const ResidueSet& b, Residue z);

/// { z : B + z = B }, always a subgroup of Z_k. Throws on empty B.
ResidueSet stabilizer(const ResidueSet& b);

bool is_subgroup(const ResidueSet& z);

bool is_full(const ResidueSet& b);

/// The r with 2r = 1 (mod k) for odd k >= 3.
Residue inverse_of_two(std::uint64_t k);

std::uint64_t smallest_prime_divisor(std::uint64_t k);

/// Non-negative residue of value mod k.
Residue mod(std::int64_t value, std::uint64_t k);

enum class Orientation { kForward, kReverse };

/// A cycle with a distinguished entry vertex u and a fixed traversal direction
/// (forward = along the stored vertex sequence).
class JunctionGeometry {
 public:
  JunctionGeometry(CycleWitness cycle, Vertex u, Orientation orientation = Orientation::kForward);

  const CycleWitness& cycle() const { return cycle_; }
  Vertex entry() const { return cycle_.vertices[entry_pos_]; }
  Orientation orientation() const { return orientation_; }

  /// Position of x on the cycle, or npos.
  std::size_t position(Vertex x) const;

  /// l(C[u, x]): edges walked from u to x in the fixed direction.
  std::size_t arc_length(Vertex x) const;

  /// Vertices of C[u, x] in traversal order (u first, x last).
  PathWitness arc(Vertex x) const;

  JunctionGeometry reversed() const;

 private:
  CycleWitness cycle_;
  std::size_t entry_pos_;
  Orientation orientation_;
};

/// (l(C[u, x]) - l(C[x, u])) mod k.
Residue diff_along_cycle(const JunctionGeometry& jg, Vertex x, std::uint64_t k);

/// Cycle vertices other than u whose diff lies in the subgroup z. Sorted.
/// Throws ContractViolation if z is not a subgroup of Z_k.
std::vector<Vertex> bad_vertex_set(const JunctionGeometry& jg, const ResidueSet& z,
                                   std::uint64_t k);

}  // namespace modcyc
