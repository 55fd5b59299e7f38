// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "modcyc/chain.hpp"
#include "modcyc/cycle_search.hpp"
#include "modcyc/errors.hpp"
#include "modcyc/expansion.hpp"
#include "modcyc/generators.hpp"
#include "modcyc/residue.hpp"
#include "oracles.hpp"

using namespace modcyc;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Rational random_alpha(std::mt19937_64& rng) {
  auto q = static_cast<std::int64_t>(1 + rng() % 6);
  auto p = static_cast<std::int64_t>(1 + rng() % static_cast<std::uint64_t>(3 * q));
  return Rational(p, q);
}

Outcome expansion_oracle() {
  std::mt19937_64 rng(101);
  int agree = 0, total = 0;
  for (int graph = 0; graph < 200; ++graph) {
    std::size_t n = 2 + rng() % 13;
    Graph g = oracle::random_graph(n, 0.2 + 0.7 * static_cast<double>(rng() % 1000) / 1000.0, rng);
    std::vector<Rational> alphas;
    auto [num, den] = oracle::min_ratio(g);
    if (num > 0) {
      alphas.emplace_back(num, den);
      alphas.push_back(Rational(num, den) + Rational(1, 60));
    }
    while (alphas.size() < 5) alphas.push_back(random_alpha(rng));
    for (const auto& alpha : alphas) {
      auto report = certify_exact(g, alpha);
      bool refuted = report.verdict == Verdict::kRefutedWithWitness;
      bool ok = refuted == oracle::has_violating_subset(g, alpha.num(), alpha.den());
      if (ok && refuted) {
        const auto& x = *report.witness;
        ok = !x.empty() && x.size() <= n / 2 &&
             below_ratio(static_cast<std::int64_t>(external_neighborhood(g, x).size()), alpha,
                         static_cast<std::int64_t>(x.size()));
      }
      agree += ok ? 1 : 0;
      ++total;
    }
  }
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " verdicts agree"};
}

Outcome removal_lemma() {
  std::mt19937_64 rng(202);
  int cases = 0, good = 0;
  const Rational betas[] = {Rational(1, 10), Rational(1, 5), Rational(1, 4)};
  while (cases < 100) {
    std::size_t n = 8 + rng() % 9;
    Graph g = oracle::random_graph(n, 0.45 + 0.45 * static_cast<double>(rng() % 1000) / 1000.0, rng);
    auto ratio = exact_expansion_ratio(g);
    if (!ratio) continue;
    Rational alpha = ratio->ratio;
    Rational beta = betas[rng() % 3];
    if (!(beta < alpha)) continue;
    auto limit = removal_fraction(alpha, beta).floor_times(static_cast<std::int64_t>(n));
    if (limit < 1) continue;
    if (certify_exact(g, alpha).verdict != Verdict::kCertifiedExpander) return {false, "oracle set-up"};
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    perm.resize(1 + rng() % static_cast<std::size_t>(limit));
    VertexSet x(n, perm);
    ++cases;
    try {
      auto result = clean_after_deletion(g, alpha, beta, x);
      bool size_ok = Rational(static_cast<std::int64_t>(result.y.size())) * (alpha - beta) <
                     Rational(static_cast<std::int64_t>(x.size()));
      bool disjoint = result.y.intersected(x).empty();
      bool expands = certify_exact(result.cleaned, beta).verdict == Verdict::kCertifiedExpander;
      good += size_ok && disjoint && expands ? 1 : 0;
    } catch (const Error&) {
    }
  }
  return {good == cases, std::to_string(good) + "/" + std::to_string(cases) + " cleanings meet both post-conditions"};
}

Outcome diameter_bound() {
  std::mt19937_64 rng(303);
  std::vector<Graph> corpus{petersen_graph(), complete_graph(5), complete_graph(12), cycle_graph(7),
                            cycle_graph(20), subdivided_clique(4, 2), path_graph(3), path_graph(4)};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    corpus.push_back(random_regular(10 + 2 * (seed % 6), 3 + seed % 3, seed));
  }
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 3 + rng() % 18;
    corpus.push_back(oracle::random_graph(n, 0.15 + 0.75 * static_cast<double>(rng() % 1000) / 1000.0, rng));
  }
  int checked = 0, small = 0, large = 0;
  std::string first;
  for (const auto& g : corpus) {
    auto ratio = exact_expansion_ratio(g);
    if (!ratio || !(Rational(0) < ratio->ratio)) continue;
    for (const auto& alpha : {ratio->ratio, ratio->ratio / Rational(2)}) {
      if (certify_exact(g, alpha).verdict != Verdict::kCertifiedExpander) return {false, "certification mismatch"};
      ++checked;
      auto diam = oracle::diameter(g);
      auto bound = diameter_upper_bound(g.order(), alpha);
      if (diam <= bound) continue;
      (g.order() <= 5 ? small : large) += 1;
      if (first.empty()) {
        first = "n = " + std::to_string(g.order()) + ", m = " + std::to_string(g.size()) + ", alpha = " +
                alpha.to_string() + ": diameter " + std::to_string(diam) + " > " + std::to_string(bound);
      }
    }
  }
  std::string detail = std::to_string(checked) + " certified (graph, alpha) pairs, " + std::to_string(small + large) +
                       " violations (" + std::to_string(small) + " with n <= 5, " + std::to_string(large) +
                       " with n >= 6)";
  if (!first.empty()) detail += "; e.g. " + first;
  return {small + large == 0 && checked > 100, detail};
}

Outcome residue_algebra() {
  std::size_t violations = 0, sets = 0;
  for (std::uint64_t k = 1; k <= 12; ++k) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      ResidueSet b(k);
      for (Residue r = 0; r < k; ++r) {
        if (mask >> r & 1) b.insert(r);
      }
      ++sets;
      auto stab = stabilizer(b);
      if (!is_subgroup(stab)) ++violations;
      if (b.contains(0)) {
        for (Residue z : stab.members()) violations += b.contains(z) ? 0 : 1;
      }
      for (Residue z = 0; z < k; ++z) {
        bool fixed = extend_by_element(b, z) == b;
        if (fixed != stab.contains(z)) ++violations;
      }
    }
  }
  return {violations == 0, std::to_string(sets) + " residue sets, " + std::to_string(violations) + " violations"};
}

Outcome bad_set_bound() {
  std::mt19937_64 rng(505);
  const std::uint64_t moduli[] = {9, 15, 21, 33};
  int violations = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::uint64_t k = moduli[rng() % 4];
    std::uint64_t p = smallest_prime_divisor(k);
    std::vector<std::uint64_t> proper;
    for (std::uint64_t d = 2; d <= k; ++d) {
      if (k % d == 0) proper.push_back(d);
    }
    std::uint64_t d = proper[rng() % proper.size()];
    ResidueSet z(k);
    for (Residue r = 0; r < k; r += d) z.insert(r);
    std::size_t len = 3 + rng() % 400;
    CycleWitness c;
    std::vector<Vertex> labels(len);
    std::iota(labels.begin(), labels.end(), Vertex{0});
    std::shuffle(labels.begin(), labels.end(), rng);
    c.vertices = labels;
    auto orientation = rng() % 2 ? Orientation::kForward : Orientation::kReverse;
    JunctionGeometry jg(c, labels[rng() % len], orientation);
    auto bad = bad_vertex_set(jg, z, k);
    // |K| <= |V(C)|/p + 1
    if (bad.size() * p > len + p) ++violations;
  }
  return {violations == 0, "10000 instances, " + std::to_string(violations) + " violations"};
}

struct EndToEnd {
  int runs = 0, all_found = 0, witnesses = 0, bad_witnesses = 0;
  int chains = 0, identity_checks = 0, identity_violations = 0;
};

EndToEnd run_end_to_end() {
  EndToEnd e;
  std::mt19937_64 rng(707);
  for (std::uint64_t k : {3u, 5u}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Graph g = random_regular(1000, 6, seed);
      ++e.runs;
      ResidueCycleReport report;
      try {
        report = cycles_all_residues(g, Rational(3, 4), k, Mode::kBestEffort, {.seed = seed});
      } catch (const Error&) {
        continue;
      }
      if (report.all_found()) ++e.all_found;
      for (const auto& entry : report.residues) {
        if (!entry.cycle) continue;
        ++e.witnesses;
        if (!validate_cycle(g, *entry.cycle) || entry.cycle->length() % k != entry.r) ++e.bad_witnesses;
      }
      if (!report.chain || !report.closing || !report.chain->complete()) continue;
      ++e.chains;
      const auto& state = *report.chain;
      auto base = assemble_cycle(g, state, *report.closing, {});
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::size_t> j;
        std::uint64_t shift = 0;
        for (std::size_t i = 1; i < state.t(); ++i) {
          if (rng() % 2) {
            j.push_back(i);
            shift += state.z[i - 1];
          }
        }
        auto c = assemble_cycle(g, state, *report.closing, j);
        ++e.identity_checks;
        if (!validate_cycle(g, c) || c.length() % k != (base.length() + shift) % k) ++e.identity_violations;
      }
    }
  }
  return e;
}

Outcome sharpness() {
  int runs = 0, divisible = 0, enumeration_ok = 0, enumerated = 0, marker_ok = 0, zero_found = 0;
  for (std::uint64_t p : {3u, 5u, 7u}) {
    for (std::size_t base_n : {20u, 50u}) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto c = proposition_counterexample(p, base_n, seed);
        ++runs;
        if (verify_divisibility(c.graph, p).divisible) ++divisible;
        if (base_n == 20) {
          ++enumerated;
          auto lengths = enumerate_cycle_lengths(c.graph);
          bool all = !lengths.empty() &&
                     std::all_of(lengths.begin(), lengths.end(), [p](std::size_t l) { return l % p == 0; });
          enumeration_ok += all ? 1 : 0;
        }
        // subdivided cubic graphs expand only weakly; assert a small alpha
        auto report = cycles_all_residues(c.graph, Rational(1, 10), p, Mode::kBestEffort, {.seed = seed});
        bool ok = report.residues.size() == p;
        for (const auto& e : report.residues) {
          if (e.r % p != 0) {
            ok = ok && !e.cycle && !e.failure.empty();
          } else if (e.cycle) {
            ok = ok && validate_cycle(c.graph, *e.cycle) && e.cycle->length() % p == 0;
            ++zero_found;
          }
        }
        marker_ok += ok ? 1 : 0;
      }
    }
  }
  std::ostringstream d;
  d << divisible << "/" << runs << " divisible, " << enumeration_ok << "/" << enumerated
    << " confirmed by enumeration, " << marker_ok << "/" << runs << " reports with markers off 0 mod p ("
    << zero_found << " realised r = 0)";
  return {divisible == runs && enumeration_ok == enumerated && marker_ok == runs, d.str()};
}

Outcome subdivision_law() {
  std::mt19937_64 rng(909);
  int checks = 0, violations = 0;
  for (int base_index = 0; base_index < 50; ++base_index) {
    std::size_t n = 3 + rng() % 10;
    Graph base = oracle::random_graph(n, 0.15 + 0.25 * static_cast<double>(rng() % 1000) / 1000.0, rng);
    auto base_lengths = oracle::cycle_lengths_dp(base);
    for (std::size_t times : {1u, 2u, 3u}) {
      Graph sub = subdivide(base, times).graph;
      std::set<std::size_t> expect;
      for (auto l : base_lengths) expect.insert(l * (times + 1));
      auto lib = enumerate_cycle_lengths(sub);
      auto dfs = oracle::cycle_lengths_dfs(sub);
      ++checks;
      if (std::set<std::size_t>(lib.begin(), lib.end()) != expect || dfs != expect) ++violations;
    }
  }
  return {violations == 0, std::to_string(checks) + " subdivisions, " + std::to_string(violations) + " violations"};
}

namespace mp = boost::multiprecision;
using Big = mp::cpp_int;
using Exact = mp::cpp_rational;
using Real = mp::cpp_bin_float_50;

Exact exact(const Rational& r) { return Exact(Big(r.num()), Big(r.den())); }

Big floor_of(const Exact& x) {
  Big q = mp::numerator(x) / mp::denominator(x);
  if (x < 0 && Exact(q) != x) q -= 1;
  return q;
}

Big ceil_of(const Real& x) { return static_cast<Big>(mp::ceil(x)); }

/// Re-derives the schedule's three inequalities at n with multiprecision arithmetic.
bool inequalities_hold(const ParameterSchedule& s, const Big& n) {
  const Exact a1 = exact(s.constants.a1), a2 = exact(s.constants.a2), eps = exact(s.epsilon);
  const Real ln_n = mp::log(Real(n));
  const Real ln_eps = mp::log1p(Real(mp::numerator(eps)) / Real(mp::denominator(eps)));
  const Big unit = ceil_of(Real(mp::numerator(a1)) / Real(mp::denominator(a1)) * ln_n);
  const Big d(s.D);
  const std::uint64_t k = s.k;
  // (1)
  if (n < Big(4) * Big(s.constants.N)) return false;
  // (2)
  if (unit * mp::pow(d, static_cast<unsigned>(k + 1)) > floor_of(a2 * Exact(n) / 4)) return false;
  // (3)
  Big cycles = 0;
  for (std::uint64_t j = 1; j <= k; ++j) cycles += mp::pow(d, static_cast<unsigned>(j + 1));
  Real lhs = Real(k) * 2 * ln_n / ln_eps + Real(unit * cycles) + Real(Big(s.constants.A) * k);
  Big rhs = floor_of(eps * eps * Exact(n) / (4 * eps + 2));
  return lhs <= Real(rhs);
}

Outcome schedule_audit() {
  ParameterSchedule s;
  try {
    s = make_schedule(Rational(3, 4), 3, Mode::kStrict);
  } catch (const Error& e) {
    return {false, std::string("make_schedule threw: ") + e.what()};
  }
  const Exact eps = exact(s.epsilon), alpha = exact(s.alpha);
  const Exact a1 = exact(s.constants.a1);
  bool eps_ok = eps > 0 && eps < Exact(1, 6) && alpha - 3 * eps > Exact(1, s.p - 1);
  const Real ln_eps = mp::log1p(Real(mp::numerator(eps)) / Real(mp::denominator(eps)));
  const Real a1r = Real(mp::numerator(a1)) / Real(mp::denominator(a1));
  Real d_first = Real(2 * s.k) / (a1r * ln_eps) + Real(s.constants.A * s.k + 2) / a1r;
  bool d_ok = Real(s.D) >= d_first && Exact(s.D) >= Exact(2 * s.p) / eps + 1;
  if (!s.n0) return {false, "n0 not computed exactly"};
  const Big n0(*s.n0);
  bool n0_ok = inequalities_hold(s, n0);
  const std::vector<Big> samples{Big(n0 + 1), Big(n0 + 12345), Big(n0 * 2), Big(n0 * 10), Big(n0 * 1000),
                                 Big(n0 * Big("1000000000"))};
  for (const Big& n : samples) {
    n0_ok = n0_ok && inequalities_hold(s, n);
  }
  bool minimal = !inequalities_hold(s, Big(n0 - 1));
  std::ostringstream d;
  d << "epsilon = " << s.epsilon.to_string() << ", D = " << s.D << ", n0 = " << *s.n0 << " (log10 "
    << static_cast<double>(s.n0_log10) << "), n0 - 1 fails: " << (minimal ? "yes" : "no")
    << "; constraints: eps " << (eps_ok ? "ok" : "BAD") << ", D " << (d_ok ? "ok" : "BAD") << ", n0 "
    << (n0_ok ? "ok" : "BAD");
  return {eps_ok && d_ok && n0_ok, d.str()};
}

int failures = 0;

void report(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& run) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = limit_seconds <= 0 || seconds < limit_seconds;
  bool pass = o.pass && in_time;
  failures += pass ? 0 : 1;
  std::printf("%s criterion %d (%s): %s [%.1f s%s]\n", pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(),
              seconds, in_time ? "" : ", over time limit");
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  // With an argument, run only that criterion.
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  auto want = [&](int id) { return only == 0 || only == id; };

  if (want(1)) report(1, "expansion oracle equivalence", 60, expansion_oracle);
  if (want(2)) report(2, "removal-lemma contract", 120, removal_lemma);
  if (want(3)) report(3, "diameter bound", 0, diameter_bound);
  if (want(4)) report(4, "residue algebra", 30, residue_algebra);
  if (want(5)) report(5, "bad-set bound", 0, bad_set_bound);

  EndToEnd e2e;
  if (want(6) || want(7)) {
    report(6, "end-to-end residues at n = 1000", 300, [&] {
      e2e = run_end_to_end();
      std::ostringstream d;
      d << e2e.all_found << "/" << e2e.runs << " runs with every residue, " << e2e.witnesses << " witnesses, "
        << e2e.bad_witnesses << " invalid";
      return Outcome{e2e.all_found * 10 >= e2e.runs * 9 && e2e.bad_witnesses == 0, d.str()};
    });
  }
  if (want(7)) {
    report(7, "length identity", 0, [&] {
      std::ostringstream d;
      d << e2e.chains << " completed chains, " << e2e.identity_checks << " subsets, " << e2e.identity_violations
        << " violations";
      return Outcome{e2e.chains > 0 && e2e.identity_checks == 50 * e2e.chains && e2e.identity_violations == 0,
                     d.str()};
    });
  }
  if (want(8)) report(8, "sharpness counterexamples", 0, sharpness);
  if (want(9)) report(9, "subdivision spectrum law", 0, subdivision_law);
  if (want(10)) report(10, "strict schedule audit", 0, schedule_audit);
  std::printf("%d criteria failed\n", failures);
  return failures;
}
