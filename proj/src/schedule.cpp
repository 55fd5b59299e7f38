#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "modcyc/chain.hpp"
#include "modcyc/errors.hpp"

namespace modcyc {

namespace {

using u128 = unsigned __int128;

constexpr u128 kSaturated = u128{1} << 120;
constexpr std::uint64_t kMaxExactN = std::uint64_t{1} << 62;

u128 sat_mul(u128 a, u128 b) {
  if (a == 0 || b == 0) return 0;
  if (a >= kSaturated || b >= kSaturated || a > kSaturated / b) return kSaturated;
  return a * b;
}

u128 sat_add(u128 a, u128 b) { return std::min(kSaturated, a + b); }

u128 sat_pow(u128 base, std::uint64_t e) {
  u128 out = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    out = sat_mul(out, base);
    if (out == kSaturated) break;
  }
  return out;
}

// floor(q * n) for a non-negative rational q.
u128 floor_rational_times(const Rational& q, std::uint64_t n) {
  return sat_mul(static_cast<u128>(q.num()), n) / static_cast<u128>(q.den());
}

Rational reservoir_fraction(const Rational& eps) { return eps * eps / (Rational(4) * eps + Rational(2)); }

/// Same inequalities in long double, for n beyond the exact range.
bool inequalities_hold_approx(const ParameterSchedule& s, long double n) {
  const auto& c = s.constants;
  const long double ln_n = std::log(n);
  const long double unit = std::ceil(c.a1.to_long_double() * ln_n);
  const long double d = static_cast<long double>(s.D);
  const auto k = static_cast<long double>(s.k);
  if (n < 4.0L * static_cast<long double>(c.N)) return false;
  const long double log_lhs2 = std::log(unit) + (k + 1) * std::log(d);
  if (log_lhs2 > std::log(std::floor(c.a2.to_long_double() * n / 4.0L))) return false;
  long double sum = 0;
  for (std::uint64_t j = 1; j <= s.k; ++j) sum += std::pow(d, static_cast<long double>(j + 1));
  const long double lhs3 = k * 2.0L * ln_n / std::log1p(s.epsilon.to_long_double()) + unit * sum +
                           static_cast<long double>(c.A) * k;
  return lhs3 <= std::floor(reservoir_fraction(s.epsilon).to_long_double() * n);
}

long double estimate_n0_log10(const ParameterSchedule& s) {
  long double hi = 4.0L * static_cast<long double>(s.constants.N);
  const long double limit = std::numeric_limits<long double>::max() / 4;
  while (!inequalities_hold_approx(s, hi)) {
    if (hi > limit) return std::numeric_limits<long double>::infinity();
    hi *= 2;
  }
  long double lo = hi / 2;
  for (int i = 0; i < 200 && hi - lo > 1; ++i) {
    long double mid = lo + (hi - lo) / 2;
    (inequalities_hold_approx(s, mid) ? hi : lo) = mid;
  }
  return std::log10(hi);
}

/// First n in [from, ...) with all inequalities holding, assuming eventual monotonicity.
std::optional<std::uint64_t> first_satisfying(const ParameterSchedule& s, std::uint64_t from) {
  auto ok = [&](std::uint64_t n) { return check_schedule_inequalities(s, n).all(); };
  if (ok(from)) return from;
  std::uint64_t lo = from;  // fails
  std::uint64_t step = 1;
  std::uint64_t hi = from;
  while (true) {
    hi = from + step;
    if (hi > kMaxExactN) return std::nullopt;
    if (ok(hi)) break;
    lo = hi;
    step *= 2;
  }
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

/// A failing n in [n0, 2 n0], probing every jump of ceil(a1 ln n) and evenly spaced samples.
std::optional<std::uint64_t> window_violation(const ParameterSchedule& s, std::uint64_t n0) {
  auto ok = [&](std::uint64_t n) { return check_schedule_inequalities(s, n).all(); };
  const std::uint64_t top = n0 * 2;
  const long double a1 = s.constants.a1.to_long_double();
  for (std::uint64_t m = s.log_unit(n0); m <= s.log_unit(top); ++m) {
    auto start = static_cast<std::uint64_t>(std::floor(std::exp(static_cast<long double>(m) / a1)));
    for (std::uint64_t n = start > 2 ? start - 2 : 1; n <= start + 2; ++n) {
      if (n >= n0 && n <= top && !ok(n)) return n;
    }
  }
  constexpr std::uint64_t kSamples = 1024;
  for (std::uint64_t i = 0; i <= kSamples; ++i) {
    std::uint64_t n = n0 + static_cast<std::uint64_t>(static_cast<u128>(n0) * i / kSamples);
    if (!ok(n)) return n;
  }
  return std::nullopt;
}

}  // namespace

const char* to_string(Mode m) { return m == Mode::kStrict ? "strict" : "best-effort"; }

Mode parse_mode(const std::string& text) {
  if (text == "strict") return Mode::kStrict;
  if (text == "best-effort" || text == "best_effort") return Mode::kBestEffort;
  throw ContractViolation("unknown mode '" + text + "' (expected strict or best-effort)");
}

std::uint64_t ParameterSchedule::log_unit(std::uint64_t n) const {
  if (n <= 1) return 0;
  return static_cast<std::uint64_t>(
      std::ceil(constants.a1.to_long_double() * std::log(static_cast<long double>(n))));
}

std::uint64_t ParameterSchedule::cycle_length(std::size_t i, std::uint64_t n) const {
  if (i < 1) throw ContractViolation("cycle index starts at 1");
  const u128 unit = log_unit(n);
  if (mode == Mode::kStrict) {
    u128 len = sat_mul(unit, sat_pow(D, i + 1));
    return len >= std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                            : static_cast<std::uint64_t>(len);
  }
  const std::uint64_t growth = std::min(D, d_cap);
  const std::uint64_t cap = std::max<std::uint64_t>(3, n / (4 * k));
  u128 len = sat_mul(unit, sat_pow(growth, i - 1));
  return std::max<std::uint64_t>(3, static_cast<std::uint64_t>(std::min<u128>(len, cap)));
}

std::uint64_t ParameterSchedule::reservoir_formula(std::uint64_t n) const {
  return static_cast<std::uint64_t>(floor_rational_times(reservoir_fraction(epsilon), n));
}

long double ParameterSchedule::path_interior_bound(std::uint64_t n) const {
  return 2.0L * std::log(static_cast<long double>(n)) / std::log1p(epsilon.to_long_double());
}

ScheduleInequalities check_schedule_inequalities(const ParameterSchedule& s, std::uint64_t n) {
  ScheduleInequalities out;
  const auto& c = s.constants;
  out.order = n >= 4 * c.N;
  const u128 unit = s.log_unit(n);

  const u128 lhs2 = sat_mul(unit, sat_pow(s.D, s.k + 1));
  const u128 rhs2 = floor_rational_times(c.a2, n) / 4;
  // floor(a2 n / 4) = floor(floor(a2 n) / 4)
  out.window = lhs2 < kSaturated && lhs2 <= rhs2;

  u128 powers = 0;
  for (std::uint64_t j = 1; j <= s.k; ++j) powers = sat_add(powers, sat_pow(s.D, j + 1));
  const u128 integral = sat_add(sat_mul(unit, powers), sat_mul(c.A, s.k));
  const u128 rhs3 = floor_rational_times(reservoir_fraction(s.epsilon), n);
  if (integral < kSaturated && integral <= rhs3) {
    const long double real = static_cast<long double>(s.k) * 2.0L * std::log(static_cast<long double>(n)) /
                             std::log1p(s.epsilon.to_long_double());
    out.reservoir = real <= static_cast<long double>(rhs3 - integral);
  }
  return out;
}

ParameterSchedule make_schedule(const Rational& alpha, std::uint64_t k, Mode mode,
                                const ScheduleOverrides& overrides) {
  if (k < 2) throw ContractViolation("make_schedule needs k >= 2, got " + std::to_string(k));
  if (!(Rational(0) < alpha)) throw ContractViolation("alpha must be positive, got " + alpha.to_string());
  const auto& c = overrides.constants;
  if (!(Rational(0) < c.a1) || !(Rational(0) < c.a2)) throw ContractViolation("a1 and a2 must be positive");

  ParameterSchedule s;
  s.alpha = alpha;
  s.k = k;
  s.p = smallest_prime_divisor(k);
  s.mode = mode;
  s.constants = c;
  s.d_cap = std::max<std::uint64_t>(overrides.d_cap, 2);

  const Rational threshold(1, static_cast<std::int64_t>(s.p - 1));
  if (mode == Mode::kStrict) {
    if (k % 2 == 0 && alpha <= Rational(1)) {
      throw EvenKUnsupported("even k = " + std::to_string(k) +
                             " has p = 2, which needs alpha > 1; no non-trivial such expanders exist");
    }
    if (alpha <= threshold) {
      throw AlphaTooSmall("alpha = " + alpha.to_string() + " <= 1/(p-1) = " + threshold.to_string() +
                          "; subdivided expanders show no guarantee is possible");
    }
  }
  if (threshold < alpha) {
    s.epsilon = std::min(Rational(1, 8), (alpha - threshold) / Rational(4));
  } else {
    s.epsilon = alpha / Rational(16);
    s.warnings.push_back("alpha = " + alpha.to_string() + " <= 1/(p-1) = " + threshold.to_string() +
                         ": outside the guaranteed regime, epsilon set to alpha/16");
  }
  if (mode == Mode::kStrict) {
    if (!(Rational(0) < s.epsilon && s.epsilon < Rational(1, 6)) ||
        !(threshold < alpha - Rational(3) * s.epsilon)) {
      throw InternalError("epsilon " + s.epsilon.to_string() + " violates its constraints");
    }
  }
  s.alpha_prime = alpha - s.epsilon;

  const long double a1 = c.a1.to_long_double();
  const auto kd = static_cast<long double>(k);
  const long double bound1 = 2.0L * kd / (a1 * std::log1p(s.epsilon.to_long_double())) +
                             (static_cast<long double>(c.A) * kd + 2.0L) / a1;
  const Rational bound2 = Rational(static_cast<std::int64_t>(2 * s.p)) / s.epsilon + Rational(1);
  s.D = std::max(static_cast<std::uint64_t>(std::ceil(bound1)), static_cast<std::uint64_t>(bound2.ceil()));

  std::optional<std::uint64_t> n0 = first_satisfying(s, 4 * c.N);
  for (int round = 0; n0 && round < 16; ++round) {
    auto bad = window_violation(s, *n0);
    if (!bad) break;
    n0 = first_satisfying(s, *bad + 1);
  }
  s.n0 = n0;
  s.n0_log10 = n0 ? std::log10(static_cast<long double>(*n0)) : estimate_n0_log10(s);
  return s;
}

}  // namespace modcyc
