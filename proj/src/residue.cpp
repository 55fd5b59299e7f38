#include "modcyc/residue.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "modcyc/errors.hpp"

namespace modcyc {

ResidueSet::ResidueSet(std::uint64_t k) : k_(k), bits_((k + 63) / 64, 0) {
  if (k < 1) throw ContractViolation("residue modulus must be positive");
}

ResidueSet::ResidueSet(std::uint64_t k, std::span<const Residue> members) : ResidueSet(k) {
  for (Residue r : members) insert(r);
}

ResidueSet ResidueSet::full(std::uint64_t k) {
  ResidueSet s(k);
  for (Residue r = 0; r < k; ++r) s.insert(r);
  return s;
}

void ResidueSet::insert(Residue r) {
  if (r >= k_) {
    throw ContractViolation("residue " + std::to_string(r) + " outside Z_" + std::to_string(k_));
  }
  std::uint64_t& word = bits_[r >> 6];
  std::uint64_t bit = std::uint64_t{1} << (r & 63);
  if (!(word & bit)) {
    word |= bit;
    ++count_;
  }
}

ResidueSet ResidueSet::translated(Residue z) const {
  if (z >= k_) throw ContractViolation("translation by non-residue " + std::to_string(z));
  ResidueSet out(k_);
  for (Residue r : members()) out.insert((r + z) % k_);
  return out;
}

ResidueSet ResidueSet::united(const ResidueSet& other) const {
  if (other.k_ != k_) throw ContractViolation("residue sets with different moduli");
  ResidueSet out = *this;
  out.count_ = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    out.bits_[i] |= other.bits_[i];
    out.count_ += static_cast<std::size_t>(std::popcount(out.bits_[i]));
  }
  return out;
}

std::vector<Residue> ResidueSet::members() const {
  std::vector<Residue> out;
  out.reserve(count_);
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    for (std::uint64_t word = bits_[w]; word != 0; word &= word - 1) {
      out.push_back(w * 64 + static_cast<Residue>(std::countr_zero(word)));
    }
  }
  return out;
}

ResidueSet extend_by_element(const ResidueSet& b, Residue z) {
  if (z >= b.modulus()) {
    throw ContractViolation("element " + std::to_string(z) + " is not a residue mod " +
                            std::to_string(b.modulus()));
  }
  return b.united(b.translated(z));
}

namespace {

bool invariant_under(const ResidueSet& b, Residue z) {
  const std::uint64_t k = b.modulus();
  for (Residue r : b.members()) {
    if (!b.contains((r + z) % k)) return false;
  }
  return true;
}

ResidueSet multiples_of(std::uint64_t d, std::uint64_t k) {
  ResidueSet out(k);
  for (Residue r = 0; r < k; r += d) out.insert(r);
  return out;
}

}  // namespace

ResidueSet stabilizer(const ResidueSet& b) {
  const std::uint64_t k = b.modulus();
  // The stabilizer is the subgroup generated by its smallest positive member,
  // which divides k; test divisors in increasing order.
  for (std::uint64_t d = 1; d < k; ++d) {
    if (k % d == 0 && invariant_under(b, d)) return multiples_of(d, k);
  }
  return multiples_of(k, k);
}

bool is_subgroup(const ResidueSet& z) {
  if (!z.contains(0)) return false;
  const std::uint64_t k = z.modulus();
  auto m = z.members();
  std::uint64_t g = m.size() > 1 ? m[1] : k;
  if (k % g != 0) return false;
  return z.size() == k / g && z == multiples_of(g, k);
}

bool is_full(const ResidueSet& b) { return b.size() == b.modulus(); }

Residue inverse_of_two(std::uint64_t k) {
  if (k < 3 || k % 2 == 0) {
    throw ContractViolation("2 has no inverse modulo " + std::to_string(k));
  }
  return (k + 1) / 2;
}

std::uint64_t smallest_prime_divisor(std::uint64_t k) {
  if (k < 2) throw ContractViolation("smallest prime divisor of " + std::to_string(k));
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    if (k % d == 0) return d;
  }
  return k;
}

Residue mod(std::int64_t value, std::uint64_t k) {
  auto sk = static_cast<std::int64_t>(k);
  std::int64_t r = value % sk;
  return static_cast<Residue>(r < 0 ? r + sk : r);
}

JunctionGeometry::JunctionGeometry(CycleWitness cycle, Vertex u, Orientation orientation)
    : cycle_(std::move(cycle)), entry_pos_(0), orientation_(orientation) {
  if (cycle_.vertices.size() < 3) throw ContractViolation("junction geometry needs a cycle");
  auto it = std::find(cycle_.vertices.begin(), cycle_.vertices.end(), u);
  if (it == cycle_.vertices.end()) {
    throw ContractViolation("entry vertex " + std::to_string(u) + " is not on the cycle");
  }
  entry_pos_ = static_cast<std::size_t>(it - cycle_.vertices.begin());
}

std::size_t JunctionGeometry::position(Vertex x) const {
  auto it = std::find(cycle_.vertices.begin(), cycle_.vertices.end(), x);
  return it == cycle_.vertices.end() ? std::string::npos
                                     : static_cast<std::size_t>(it - cycle_.vertices.begin());
}

std::size_t JunctionGeometry::arc_length(Vertex x) const {
  std::size_t pos = position(x);
  if (pos == std::string::npos) {
    throw ContractViolation("vertex " + std::to_string(x) + " is not on the cycle");
  }
  const std::size_t len = cycle_.length();
  return orientation_ == Orientation::kForward ? (pos + len - entry_pos_) % len
                                               : (entry_pos_ + len - pos) % len;
}

PathWitness JunctionGeometry::arc(Vertex x) const {
  const std::size_t steps = arc_length(x);
  const std::size_t len = cycle_.length();
  PathWitness p;
  p.vertices.reserve(steps + 1);
  for (std::size_t s = 0; s <= steps; ++s) {
    std::size_t pos = orientation_ == Orientation::kForward ? (entry_pos_ + s) % len
                                                            : (entry_pos_ + len - s) % len;
    p.vertices.push_back(cycle_.vertices[pos]);
  }
  return p;
}

JunctionGeometry JunctionGeometry::reversed() const {
  return JunctionGeometry(cycle_, entry(),
                          orientation_ == Orientation::kForward ? Orientation::kReverse
                                                                : Orientation::kForward);
}

Residue diff_along_cycle(const JunctionGeometry& jg, Vertex x, std::uint64_t k) {
  if (k < 1) throw ContractViolation("modulus must be positive");
  if (x == jg.entry()) throw ContractViolation("diff is undefined at the entry vertex");
  auto there = static_cast<std::int64_t>(jg.arc_length(x));
  auto back = static_cast<std::int64_t>(jg.cycle().length()) - there;
  return mod(there - back, k);
}

std::vector<Vertex> bad_vertex_set(const JunctionGeometry& jg, const ResidueSet& z,
                                   std::uint64_t k) {
  if (z.modulus() != k) throw ContractViolation("subgroup modulus mismatch");
  if (!is_subgroup(z)) throw ContractViolation("bad_vertex_set requires a subgroup of Z_k");
  std::vector<Vertex> out;
  for (Vertex x : jg.cycle().vertices) {
    if (x != jg.entry() && z.contains(diff_along_cycle(jg, x, k))) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace modcyc
