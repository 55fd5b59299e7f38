#include <doctest.h>

#include <random>

#include "modcyc/chain.hpp"
#include "modcyc/errors.hpp"
#include "modcyc/generators.hpp"
#include "oracles.hpp"

using namespace modcyc;

namespace {

std::size_t sum_mod(const std::vector<Residue>& z, const std::vector<std::size_t>& j, std::uint64_t k) {
  std::size_t s = 0;
  for (auto i : j) s = (s + z[i - 1]) % k;
  return s;
}

}  // namespace

TEST_SUITE("chain-construction") {

TEST_CASE("strict schedule for alpha 3/4, k 3") {
  auto s = make_schedule(Rational(3, 4), 3, Mode::kStrict);
  CHECK(s.p == 3);
  CHECK(s.epsilon == Rational(1, 16));
  CHECK(s.alpha - Rational(3) * s.epsilon > Rational(1, 2));
  CHECK(s.D >= 2 * 3 * 16 + 1);
  REQUIRE(s.n0);
  CHECK(check_schedule_inequalities(s, *s.n0).all());
  CHECK_FALSE(check_schedule_inequalities(s, *s.n0 - 1).all());
  CHECK(check_schedule_inequalities(s, 2 * *s.n0).all());
  CHECK(s.warnings.empty());
  CHECK(s.reservoir_formula(4096) == 7);
}

TEST_CASE("schedule refusals") {
  CHECK_THROWS_AS(make_schedule(Rational(3, 4), 4, Mode::kStrict), EvenKUnsupported);
  CHECK_THROWS_AS(make_schedule(Rational(2, 5), 3, Mode::kStrict), AlphaTooSmall);
  CHECK_THROWS_AS(make_schedule(Rational(3, 4), 1, Mode::kStrict), ContractViolation);
  auto loose = make_schedule(Rational(2, 5), 3, Mode::kBestEffort);
  CHECK(loose.epsilon == Rational(2, 5) / Rational(16));
  CHECK_FALSE(loose.warnings.empty());
  CHECK_NOTHROW(make_schedule(Rational(3, 4), 4, Mode::kBestEffort));
}

TEST_CASE("best-effort cycle lengths") {
  auto s = make_schedule(Rational(3, 4), 3, Mode::kBestEffort);
  const std::uint64_t n = 1000;
  CHECK(s.log_unit(n) == 14);
  CHECK(s.cycle_length(1, n) == 14);
  CHECK(s.cycle_length(2, n) == 56);
  CHECK(s.cycle_length(3, n) == 83);
}

TEST_CASE("reservoir") {
  auto s = make_schedule(Rational(3, 4), 3, Mode::kBestEffort);
  Graph g = random_regular(60, 4, 3);
  auto r = build_reservoir(g, s);
  CHECK(r.size() == 2);
  CHECK(is_connected(remove_vertices(g, r.complement())));

  Graph big = random_regular(5000, 6, 1);
  auto rb = build_reservoir(big, s);
  CHECK(rb.size() == std::max<std::uint64_t>(2, s.reservoir_formula(5000)));
  CHECK(is_connected(remove_vertices(big, rb.complement())));
}

TEST_CASE("subset for target is the lexicographically smallest") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    std::uint64_t k = 2 + rng() % 15;
    std::vector<Residue> z(rng() % 16);
    for (auto& x : z) x = rng() % k;
    Residue target = rng() % k;
    auto got = subset_for_target(z, target, k);
    auto expect = oracle::smallest_subset(z, target, k);
    REQUIRE(got.has_value() == expect.has_value());
    if (got) {
      CHECK(*got == *expect);
      CHECK(sum_mod(z, *got, k) == target);
    }
  }
}

TEST_CASE("chain on a random 6-regular graph") {
  Graph g = random_regular(1000, 6, 7);
  auto s = make_schedule(Rational(3, 4), 3, Mode::kBestEffort);
  auto outcome = build_chain(g, s, {.seed = 7});
  REQUIRE(outcome.state);
  REQUIRE_FALSE(outcome.failure);
  const ChainState& state = *outcome.state;
  CHECK(state.complete());
  CHECK(state.t() >= 1);
  CHECK(state.t() <= 3);
  CHECK(chain_violations(g, state).empty());
  CHECK(outcome.trace.size() == state.t());
  CHECK(outcome.trace.front()["B"] == nlohmann::json::array({0}));

  ResidueSet b(3, {0});
  for (std::size_t i = 1; i < state.t(); ++i) {
    Residue z = state.z[i - 1];
    CHECK(z == mod(arc_difference(state, i), 3));
    CHECK_FALSE(stabilizer(b).contains(z));
    b = extend_by_element(b, z);
    CHECK(b.size() >= i + 1);
    CHECK(state.v[i] != state.u[i - 1]);
  }
  CHECK(b == state.b);
}

TEST_CASE("assembled cycles satisfy the length identity") {
  Graph g = random_regular(1000, 6, 3);
  auto report = cycles_all_residues(g, Rational(3, 4), 5, Mode::kBestEffort, {.seed = 3});
  REQUIRE(report.chain);
  REQUIRE(report.closing);
  const auto& state = *report.chain;
  auto base = assemble_cycle(g, state, *report.closing, {});
  CHECK(validate_cycle(g, base));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::size_t> j;
    for (std::size_t i = 1; i < state.t(); ++i) {
      if (rng() % 2) j.push_back(i);
    }
    auto c = assemble_cycle(g, state, *report.closing, j);
    CHECK(validate_cycle(g, c));
    CHECK(c.length() % 5 == (base.length() + sum_mod(state.z, j, 5)) % 5);
  }
  for (const auto& e : report.residues) {
    if (!e.cycle) continue;
    CHECK(validate_cycle(g, *e.cycle));
    CHECK(e.cycle->length() % 5 == e.r);
  }
}

TEST_CASE("k = 1 returns any cycle") {
  auto report = cycles_all_residues(petersen_graph(), Rational(1, 2), 1, Mode::kBestEffort);
  REQUIRE(report.residues.size() == 1);
  REQUIRE(report.residues[0].cycle);
  CHECK(validate_cycle(petersen_graph(), *report.residues[0].cycle));
}

TEST_CASE("strict mode refuses small graphs") {
  Graph g = random_regular(200, 6, 1);
  CHECK_THROWS_AS(cycles_all_residues(g, Rational(3, 4), 3, Mode::kStrict), StrictModeRefused);
}

TEST_CASE("counterexamples yield markers off the multiples of p") {
  auto c = proposition_counterexample(3, 50, 2);
  auto report = cycles_all_residues(c.graph, Rational(1, 10), 3, Mode::kBestEffort, {.seed = 2});
  REQUIRE(report.residues.size() == 3);
  for (const auto& e : report.residues) {
    if (e.r % 3 != 0) {
      CHECK_FALSE(e.cycle);
      CHECK_FALSE(e.failure.empty());
    } else {
      REQUIRE(e.cycle);
      CHECK(validate_cycle(c.graph, *e.cycle));
      CHECK(e.cycle->length() % 3 == 0);
    }
  }
}

}
