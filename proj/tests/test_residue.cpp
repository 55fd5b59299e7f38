#include <doctest.h>

#include <random>

#include "modcyc/errors.hpp"
#include "modcyc/residue.hpp"
#include "oracles.hpp"

using namespace modcyc;

namespace {

CycleWitness ring(std::size_t length) {
  CycleWitness c;
  for (std::size_t i = 0; i < length; ++i) c.vertices.push_back(static_cast<Vertex>(i));
  return c;
}

}  // namespace

TEST_SUITE("residue-algebra") {

TEST_CASE("extension examples") {
  CHECK(extend_by_element(ResidueSet(5, {0}), 2) == ResidueSet(5, {0, 2}));
  CHECK(extend_by_element(ResidueSet(5, {0, 2}), 0) == ResidueSet(5, {0, 2}));
}

TEST_CASE("iterated extension equals subset sums") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    std::uint64_t k = 1 + rng() % 30;
    std::size_t count = rng() % 16;
    std::vector<std::uint64_t> z(count);
    ResidueSet b(k, {0});
    for (auto& x : z) {
      x = rng() % k;
      b = extend_by_element(b, x);
    }
    auto expect = oracle::subset_sums(z, k);
    CHECK(b.members() == std::vector<Residue>(expect.begin(), expect.end()));
  }
}

TEST_CASE("stabilizer examples") {
  CHECK(stabilizer(ResidueSet(6, {0})) == ResidueSet(6, {0}));
  CHECK(stabilizer(ResidueSet(6, {0, 3})) == ResidueSet(6, {0, 3}));
  CHECK(stabilizer(ResidueSet::full(7)) == ResidueSet::full(7));
  CHECK(stabilizer(ResidueSet(7)) == ResidueSet::full(7));
  CHECK(stabilizer(ResidueSet(6, {0, 1, 3, 4})) == ResidueSet(6, {0, 3}));
  CHECK(is_subgroup(ResidueSet(9, {0, 3, 6})));
  CHECK_FALSE(is_subgroup(ResidueSet(9, {0, 3})));
}

TEST_CASE("inverse of two") {
  CHECK(inverse_of_two(3) == 2);
  CHECK(inverse_of_two(9) == 5);
  for (std::uint64_t k = 3; k <= 10001; k += 2) CHECK((2 * inverse_of_two(k)) % k == 1);
  CHECK_THROWS_AS(inverse_of_two(8), ContractViolation);
}

TEST_CASE("fullness") {
  CHECK(is_full(ResidueSet::full(4)));
  CHECK_FALSE(is_full(ResidueSet(4, {0})));
  for (std::uint64_t k = 2; k <= 100; ++k) {
    for (std::uint64_t g = 1; g < k; ++g) {
      if (std::gcd(g, k) != 1) continue;
      ResidueSet b(k, {0});
      std::size_t steps = 0;
      while (!is_full(b) && steps <= k) {
        b = extend_by_element(b, g);
        ++steps;
      }
      CHECK(is_full(b));
      CHECK(steps <= k);
    }
  }
}

TEST_CASE("smallest prime divisor") {
  CHECK(smallest_prime_divisor(9) == 3);
  CHECK(smallest_prime_divisor(25) == 5);
  CHECK(smallest_prime_divisor(12) == 2);
  CHECK(smallest_prime_divisor(49) == 7);
  CHECK(smallest_prime_divisor(13) == 13);
}

TEST_CASE("diff along a cycle") {
  JunctionGeometry seven(ring(7), 0);
  CHECK(diff_along_cycle(seven, 3, 5) == 4);
  JunctionGeometry eight(ring(8), 2);
  for (std::uint64_t k = 2; k < 12; ++k) CHECK(diff_along_cycle(eight, 6, k) == 0);
}

TEST_CASE("diff formulas agree") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t len = 3 + rng() % 60;
    std::uint64_t k = 2 + rng() % 20;
    Vertex u = rng() % len, x = (u + 1 + rng() % (len - 1)) % len;
    auto orientation = rng() % 2 ? Orientation::kForward : Orientation::kReverse;
    JunctionGeometry jg(ring(len), u, orientation);
    auto a = static_cast<std::int64_t>(jg.arc_length(x));
    auto arc = jg.arc(x);
    CHECK(static_cast<std::int64_t>(arc.length()) == a);
    CHECK(arc.front() == u);
    CHECK(arc.back() == x);
    auto other = jg.reversed().arc(x);
    CHECK(static_cast<std::int64_t>(other.length()) == static_cast<std::int64_t>(len) - a);
    CHECK(diff_along_cycle(jg, x, k) == mod(2 * a - static_cast<std::int64_t>(len), k));
  }
}

TEST_CASE("bad vertex set") {
  JunctionGeometry seven(ring(7), 0);
  CHECK(bad_vertex_set(seven, ResidueSet(7, {0}), 7).empty());
  auto all = bad_vertex_set(seven, ResidueSet::full(7), 7);
  CHECK(all == std::vector<Vertex>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("bad set bound on random instances") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 2000; ++trial) {
    std::uint64_t k = std::vector<std::uint64_t>{9, 15, 21}[rng() % 3];
    std::uint64_t p = smallest_prime_divisor(k);
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t d = 2; d <= k; ++d) {
      if (k % d == 0) divisors.push_back(d);
    }
    std::uint64_t d = divisors[rng() % divisors.size()];
    ResidueSet z(k);
    for (std::uint64_t r = 0; r < k; r += d) z.insert(r);
    std::size_t len = 3 + rng() % 150;
    JunctionGeometry jg(ring(len), static_cast<Vertex>(rng() % len));
    auto bad = bad_vertex_set(jg, z, k);
    CHECK(bad.size() * p <= len + p);
  }
}

}
