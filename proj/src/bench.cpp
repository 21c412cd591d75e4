#include "fme/bench.hpp"

#include <cmath>
#include <random>

#include "fme/errors.hpp"
#include "fme/modexp.hpp"

namespace fme {

namespace {

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_config(const SweepConfig& config) {
  if (config.measure_time && (config.repeats < 3 || config.warmup < 1)) {
    throw ParameterOutOfRange("timing needs at least 3 repeats and 1 warmup run");
  }
}

FactoredModulus prime_power(const Natural& p, std::uint32_t e, const SweepConfig& config) {
  FactoredModulus fm = FactoredModulus::from_factors({{p, e}}, /*trust_factors=*/true);
  if (bit_length(fm.value()) > config.max_modulus_bits) {
    throw ResourceError("modulus " + to_decimal(p) + "^" + std::to_string(e) + " has " +
                        std::to_string(bit_length(fm.value())) + " bits; cap is " +
                        std::to_string(config.max_modulus_bits));
  }
  return fm;
}

BenchPoint measure(const FactoredModulus& fm, std::uint32_t t, const Natural& a,
                   const Natural& n, const SweepConfig& config) {
  const ParameterVector tv(fm, {t});
  const Natural& m = fm.value();

  CountedResidue fast = fast_mod_exp_counted(a, n, fm, tv);
  StepCount baseline_steps;
  const Natural expected = mod_exp_baseline(a, n, m, &baseline_steps);
  if (fast.residue != expected) {
    throw ResultMismatch("fast path gave " + to_decimal(fast.residue) + " but baseline gave " +
                         to_decimal(expected) + " for " + to_decimal(a) + "^" + to_decimal(n) +
                         " mod " + fm.to_string() + " with t=" + std::to_string(t));
  }

  BenchPoint pt;
  pt.p = fm.primes()[0];
  pt.e = fm.exponents()[0];
  pt.t = t;
  pt.log10_m = log2_of(m) * std::log10(2.0);
  pt.steps_fast = fast.steps.multiplications;
  pt.steps_baseline = baseline_steps.multiplications;
  if (config.measure_time) {
    volatile std::size_t sink = 0;
    pt.time_fast_ns = median_time_ns(
        [&] { sink = sink + bit_length(fast_mod_exp(a, n, fm, tv)); }, config.repeats,
        config.warmup);
    pt.time_baseline_ns = median_time_ns(
        [&] { sink = sink + bit_length(mod_exp_baseline(a, n, m)); }, config.repeats,
        config.warmup);
    pt.ratio = static_cast<double>(pt.time_baseline_ns) / static_cast<double>(pt.time_fast_ns);
  }
  return pt;
}

}  // namespace

std::vector<BenchPoint> sweep_primes(const Natural& prime_lo, const Natural& prime_hi,
                                     const SweepConfig& config) {
  check_config(config);
  if (config.iterations < 1) throw ParameterOutOfRange("iterations must be at least 1");
  if (prime_lo < 2 || prime_hi < prime_lo) throw ParameterOutOfRange("empty prime range");

  std::mt19937_64 rng(config.seed);
  std::vector<BenchPoint> points;
  for (std::uint64_t it = 0; it < config.iterations; ++it) {
    Natural p = next_prime(uniform_natural(rng, prime_lo, prime_hi) - 1);
    if (p > prime_hi) p = prime_hi;
    while (!is_prime(p)) --p;
    if (p < prime_lo) throw ParameterOutOfRange("no prime in the configured range");

    const double ln_p = log2_of(p) * std::log(2.0);
    const double spread = std::sqrt(ln_p);
    const double k_real = (ln_p - spread) + 2 * spread * unit_interval(rng);
    const auto k = static_cast<std::uint32_t>(std::max(1.0, std::round(k_real)));

    const FactoredModulus fm = prime_power(p, k, config);
    const Natural& m = fm.value();
    const Natural lo = m / 2;
    Natural a;
    do {
      a = uniform_natural(rng, lo, m);
    } while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()));
    const Natural n = uniform_natural(rng, lo, m);
    points.push_back(measure(fm, 1, a, n, config));
  }
  return points;
}

std::vector<BenchPoint> sweep_t(const Natural& p, std::uint32_t e, const Natural& a,
                                const Natural& n, std::uint32_t t_lo, std::uint32_t t_hi,
                                const SweepConfig& config) {
  check_config(config);
  if (t_lo < 1 || t_hi < t_lo || t_hi > e) {
    throw ParameterOutOfRange("t range [" + std::to_string(t_lo) + ", " + std::to_string(t_hi) +
                              "] must lie inside [1, " + std::to_string(e) + "]");
  }
  if (!is_prime(p)) throw InvalidFactorization(to_decimal(p) + " is not prime");
  const FactoredModulus fm = prime_power(p, e, config);
  std::vector<BenchPoint> points;
  for (std::uint32_t t = t_lo; t <= t_hi; ++t) points.push_back(measure(fm, t, a, n, config));
  return points;
}

Natural first_prime_above_power_of_ten(std::uint32_t n) {
  Natural base;
  mpz_ui_pow_ui(base.get_mpz_t(), 10, n);
  return next_prime(base);
}

std::vector<BenchPoint> sweep_sqrt_family(std::uint32_t n_lo, std::uint32_t n_hi,
                                          const SweepConfig& config) {
  check_config(config);
  if (n_lo < 1 || n_hi < n_lo) throw ParameterOutOfRange("empty family range");
  if (n_hi > config.max_family_n) {
    throw ResourceError("family index " + std::to_string(n_hi) + " exceeds cap " +
                        std::to_string(config.max_family_n));
  }
  std::mt19937_64 rng(config.seed);
  std::vector<BenchPoint> points;
  for (std::uint32_t n = n_lo; n <= n_hi; ++n) {
    const Natural p = first_prime_above_power_of_ten(n);
    const FactoredModulus fm = prime_power(p, n, config);
    const Natural& m = fm.value();
    const Natural lo = m / 2;
    Natural a;
    do {
      a = uniform_natural(rng, lo, m);
    } while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()));
    const Natural exponent = uniform_natural(rng, lo, m);
    points.push_back(measure(fm, 1, a, exponent, config));
  }
  return points;
}

}  // namespace fme
