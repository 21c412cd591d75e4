// Acceptance suite. One PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fme/bench.hpp"
#include "fme/errors.hpp"
#include "fme/fit.hpp"
#include "fme/inverse_pairs.hpp"
#include "fme/matrix.hpp"
#include "fme/modexp.hpp"
#include "fme/numtheory.hpp"
#include "fme/tuner.hpp"

using namespace fme;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

Natural powm(const Natural& a, const Natural& n, const Natural& m) {
  Natural r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

FactoredModulus factor_small(std::uint64_t m) {
  std::vector<PrimePower> f;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    std::uint32_t k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (k) f.push_back({Natural(static_cast<unsigned long>(p)), k});
  }
  if (m > 1) f.push_back({Natural(static_cast<unsigned long>(m)), 1});
  return FactoredModulus::from_factors(f);
}

std::vector<ParameterVector> all_parameter_vectors(const FactoredModulus& fm) {
  std::vector<ParameterVector> out;
  std::vector<std::uint32_t> t(fm.size(), 1);
  while (true) {
    out.emplace_back(fm, t);
    std::size_t i = 0;
    while (i < t.size() && t[i] == fm.exponents()[i]) t[i++] = 1;
    if (i == t.size()) break;
    ++t[i];
  }
  return out;
}

ParameterVector random_parameters(const FactoredModulus& fm, std::mt19937_64& rng) {
  std::vector<std::uint32_t> t(fm.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = std::uniform_int_distribution<std::uint32_t>(1, fm.exponents()[i])(rng);
  }
  return ParameterVector(fm, t);
}

Natural random_unit(std::mt19937_64& rng, const Natural& m) {
  if (m == 1) return 0;
  while (true) {
    Natural a = uniform_natural(rng, 1, m - 1);
    if (gcd(a, m) == 1) return a;
  }
}

// The scalar grid: p^e for p in {2, ..., 13}, e in [1, 8].
std::vector<FactoredModulus> prime_power_grid() {
  std::vector<FactoredModulus> out;
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL}) {
    for (std::uint32_t e = 1; e <= 8; ++e) out.push_back(FactoredModulus::from_factors({{Natural(p), e}}));
  }
  return out;
}

// ---------------------------------------------------------------- 1

Verdict golden() {
  Verdict v;
  const FactoredModulus fm = parse_factored_modulus("11^3");
  const ParameterVector t1(fm, {1});
  const Natural r123 = fast_mod_exp(7, 123, fm, t1);
  const Natural r120 = fast_mod_exp(7, 120, fm, t1);
  const std::vector<Natural> p20{2, 5};
  const InversePair pair = generate_inverse_pairs(12, 20, p20)[12];
  v.require(r123 == 1234, "7^123 mod 11^3 = " + r123.get_str());
  v.require(r120 == 23, "7^120 mod 11^3 = " + r120.get_str());
  v.require(pair == InversePair{7, 4}, "pair(12) mod 20 = (" + pair.u.get_str() + "," +
                                            std::to_string(pair.v) + ")");
  v.detail << "7^123=" << r123 << " 7^120=" << r120 << " pair(12 mod 20)=(u=" << pair.u
           << ",v=" << pair.v << ")";
  return v;
}

// ---------------------------------------------------------------- 2

Verdict scalar_oracle() {
  Verdict v;
  std::mt19937_64 rng(202);
  std::uint64_t checks = 0, mismatches = 0;
  auto check = [&](const Natural& a, const Natural& n, const FactoredModulus& fm,
                   const ParameterVector& tv) {
    const Natural expect = mod_exp_baseline(a, n, fm.value());
    for (auto mode : {InverseMode::kRecursive, InverseMode::kDirect}) {
      ++checks;
      if (fast_mod_exp(a, n, fm, tv, mode) != expect) {
        ++mismatches;
        v.require(false, a.get_str() + "^" + n.get_str() + " mod " + fm.to_string() + " t=" +
                             tv.to_string() + " mode=" + std::string(to_string(mode)));
      }
    }
  };

  std::uint64_t exhaustive = 0, sampled = 0;
  for (const FactoredModulus& fm : prime_power_grid()) {
    const Natural& m = fm.value();
    const auto params = all_parameter_vectors(fm);
    if (m <= 200) {
      ++exhaustive;
      const unsigned long mm = m.get_ui();
      for (const auto& tv : params) {
        for (unsigned long a = 1; a < mm; ++a) {
          if (std::gcd(a, mm) != 1) continue;
          for (unsigned long n = 0; n <= 2 * mm; ++n) check(a, n, fm, tv);
        }
      }
    } else {
      ++sampled;
      // 1000 (a, n) draws per t, n uniform in [0, 2m].
      for (const auto& tv : params) {
        for (int s = 0; s < 1000; ++s) check(random_unit(rng, m), uniform_natural(rng, 0, 2 * m), fm, tv);
      }
    }
  }

  // Random multi-prime moduli up to 10^6.
  int multi = 0;
  while (multi < 10'000) {
    const std::uint64_t m = std::uniform_int_distribution<std::uint64_t>(6, 1'000'000)(rng);
    const FactoredModulus fm = factor_small(m);
    if (fm.size() < 2) continue;
    ++multi;
    const ParameterVector tv = random_parameters(fm, rng);
    const Natural a = random_unit(rng, fm.value());
    const Natural n = (multi % 2) ? uniform_natural(rng, 0, 2 * fm.value())
                                  : uniform_natural(rng, 0, Natural(1) << 128);
    check(a, n, fm, tv);
  }
  v.detail << checks << " comparisons, " << mismatches << " mismatches; " << exhaustive
           << " moduli exhaustive, " << sampled << " sampled, " << multi << " multi-prime";
  return v;
}

// ---------------------------------------------------------------- 3

std::pair<Natural, Natural> fib_doubling(const Natural& n, const Natural& m) {
  Natural a = 0, b = 1;
  for (std::size_t bit = bit_length(n); bit-- > 0;) {
    const Natural c = mod_floor(a * mod_floor(2 * b - a, m), m);
    const Natural d = (a * a + b * b) % m;
    if (mpz_tstbit(n.get_mpz_t(), bit)) {
      a = d;
      b = (c + d) % m;
    } else {
      a = c;
      b = d;
    }
  }
  return {a, b};
}

MatrixModM random_invertible(std::mt19937_64& rng, std::size_t d, const Natural& m) {
  while (true) {
    std::vector<Natural> e(d * d);
    for (auto& x : e) x = uniform_natural(rng, 0, m - 1);
    MatrixModM a(d, m, e);
    if (gcd(a.determinant_mod(), m) == 1) return a;
  }
}

Verdict structured_oracle() {
  Verdict v;
  std::mt19937_64 rng(303);

  // Matrices.
  std::vector<FactoredModulus> moduli;
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    for (std::uint32_t e = 1; e <= 5; ++e) moduli.push_back(FactoredModulus::from_factors({{Natural(p), e}}));
  }
  for (std::uint64_t m : {6, 10, 12, 15, 18, 20, 30, 36}) moduli.push_back(factor_small(m));
  std::uint64_t mat_checks = 0;
  const Natural e9 = 1'000'000'000;
  Natural e30;
  mpz_ui_pow_ui(e30.get_mpz_t(), 10, 30);
  for (const FactoredModulus& fm : moduli) {
    for (std::size_t d = 1; d <= 3; ++d) {
      for (int s = 0; s < 200; ++s) {
        const MatrixModM a = random_invertible(rng, d, fm.value());
        const ParameterVector tv = random_parameters(fm, rng);
        for (const Natural& n : {Natural(0), Natural(1), Natural(2), uniform_natural(rng, 0, e9),
                                 uniform_natural(rng, 0, e30)}) {
          ++mat_checks;
          if (mat_fast_exp(a, n, fm, tv) != mat_pow_baseline(a, n)) {
            v.require(false, "matrix " + a.to_string() + "^" + n.get_str() + " mod " + fm.to_string());
          }
        }
      }
    }
  }

  // Recurrences, every N <= 10^4.
  const std::vector<std::pair<RecurrenceSpec, const char*>> specs = {
      {{{1, 1}, {0, 1}}, "11^3"},
      {{{1, 1}, {2, 1}}, "2^4*3^2"},
      {{{1, 1, 1}, {0, 0, 1}}, "7^3"},
      {{{-2, 5, 3}, {4, -1, 9}}, "2^5"},
      {{{0, 0, 0, 1}, {1, 2, 3, 4}}, "5^2*7"},
  };
  std::uint64_t rec_checks = 0;
  for (const auto& [spec, text] : specs) {
    const FactoredModulus fm = parse_factored_modulus(text);
    const Natural& m = fm.value();
    const std::size_t d = spec.init.size();
    std::vector<Natural> u;
    for (const auto& x : spec.init) u.push_back(mod_floor(x, m));
    const ParameterVector tv = ParameterVector::all_ones(fm);
    for (std::size_t N = 0; N <= 10'000; ++N) {
      if (N >= d) {
        Natural next = 0;
        for (std::size_t j = 0; j < d; ++j) next += mod_floor(spec.coeffs[j], m) * u[N - 1 - j];
        u.push_back(next % m);
      }
      ++rec_checks;
      if (recurrence_term(spec, N, fm, tv) != u[N]) {
        v.require(false, std::string("recurrence mod ") + text + " at N=" + std::to_string(N));
      }
    }
  }

  // Fibonacci at 10^18 modulo 11^3.
  const FactoredModulus f1331 = parse_factored_modulus("11^3");
  Natural big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 18);
  const Natural fib = recurrence_term({{1, 1}, {0, 1}}, big, f1331, ParameterVector(f1331, {1}));
  const Natural oracle = fib_doubling(big, 1331).first;
  v.require(fib == oracle, "F(10^18) mod 1331: " + fib.get_str() + " vs " + oracle.get_str());

  // Gaussian integers: every unit with re, im < p. Every exponent up to
  // 2 (p^2 - 1) p^(2(k-1)) except for p = 11, k = 3, where the first
  // 2 (p^2 - 1) exponents are exhaustive and 20000 more are sampled per unit.
  std::uint64_t gauss_checks = 0;
  for (long p : {3L, 7L, 11L}) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      long m = 1;
      for (std::uint32_t i = 0; i < k; ++i) m *= p;
      long n_max = 2 * (p * p - 1);
      for (std::uint32_t i = 1; i < k; ++i) n_max *= p * p;
      const bool exhaustive = !(p == 11 && k == 3);
      const long dense = exhaustive ? n_max : 2 * (p * p - 1);
      const FactoredModulus fm = FactoredModulus::from_factors({{Natural(p), k}});
      for (long re = 0; re < p; ++re) {
        for (long im = 0; im < p; ++im) {
          if ((re * re + im * im) % p == 0) continue;
          GaussianResidue acc{Natural(1) % m, 0};
          const GaussianResidue z{re, im};
          for (long n = 0; n <= dense; ++n) {
            ++gauss_checks;
            if (gaussian_fast_exp(z, n, p, k) != acc) {
              v.require(false, "Gaussian (" + to_string(z) + ")^" + std::to_string(n) + " mod " +
                                   std::to_string(p) + "^" + std::to_string(k));
            }
            acc = gaussian_mul(acc, z, m);
          }
          if (!exhaustive) {
            for (int s = 0; s < 20'000; ++s) {
              const Natural n = uniform_natural(rng, 0, n_max);
              ++gauss_checks;
              if (gaussian_fast_exp(z, n, p, k) != gaussian_pow_baseline(z, n, m)) {
                v.require(false, "Gaussian sample mod 11^3");
              }
            }
          }
          // The same power through the 2x2 matrix representation.
          const Natural n = uniform_natural(rng, 0, Natural(1) << 64);
          const GaussianResidue g = gaussian_fast_exp(z, n, p, k);
          const MatrixModM mat(2, fm.value(), {Natural(re), mod_floor(-im, m), Natural(im), Natural(re)});
          const MatrixModM pw = mat_fast_exp(mat, n, fm, ParameterVector(fm, {1}));
          v.require(pw(0, 0) == g.re && pw(1, 0) == g.im, "Gaussian/matrix bridge");
        }
      }
    }
  }
  v.detail << mat_checks << " matrix, " << rec_checks << " recurrence, " << gauss_checks
           << " Gaussian comparisons; F(10^18) mod 1331 = " << fib << " (oracle " << oracle << ")";
  return v;
}

// ---------------------------------------------------------------- 4

std::uint64_t brute_gl2(unsigned long m) {
  std::uint64_t count = 0;
  for (unsigned long a = 0; a < m; ++a)
    for (unsigned long b = 0; b < m; ++b)
      for (unsigned long c = 0; c < m; ++c)
        for (unsigned long d = 0; d < m; ++d) {
          const long det = static_cast<long>(a * d) - static_cast<long>(b * c);
          const unsigned long r = static_cast<unsigned long>(((det % long(m)) + long(m)) % long(m));
          if (std::gcd(r, m) == 1) ++count;
        }
  return count;
}

Verdict gl_orders() {
  Verdict v;
  for (unsigned long m = 2; m <= 50; ++m) {
    unsigned long units = 0;
    for (unsigned long x = 1; x < m; ++x) units += std::gcd(x, m) == 1;
    v.require(gl_order(1, factor_small(m)) == units, "d=1 m=" + std::to_string(m));
  }
  for (unsigned long m : {2UL, 3UL, 4UL, 5UL, 6UL}) {
    const Natural formula = gl_order(2, factor_small(m));
    const std::uint64_t brute = brute_gl2(m);
    v.require(formula == static_cast<unsigned long>(brute), "d=2 m=" + std::to_string(m));
    v.detail << "|GL2(Z/" << m << ")|=" << formula << " ";
  }
  v.detail << "d=1 m<=50 matches phi";
  return v;
}

// ---------------------------------------------------------------- 5

Verdict complexity_shape() {
  Verdict v;
  std::mt19937_64 rng(505);

  // Family m = P(n)^n with tuned parameters.
  double lo = INFINITY, hi = 0;
  for (std::uint32_t n = 2; n <= 20; ++n) {
    const FactoredModulus fm = FactoredModulus::from_factors({{first_prime_above_power_of_ten(n), n}});
    const Natural& m = fm.value();
    const TuneResult tuned = tune_parameters(fm);
    const Natural a = random_unit(rng, m);
    const Natural exp = uniform_natural(rng, m / 2, m);
    const CountedResidue r = fast_mod_exp_counted(a, exp, fm, tuned.params);
    v.require(r.residue == powm(a, exp, m), "family residue n=" + std::to_string(n));
    const double scaled = static_cast<double>(r.steps.multiplications) / std::sqrt(log2_of(m));
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
  }
  v.require(hi <= 2 * lo, "band max/min = " + std::to_string(hi / lo));
  char buf[160];
  std::snprintf(buf, sizeof buf, "mult/sqrt(log2 m) in [%.3f, %.3f] (x%.3f); ", lo, hi, hi / lo);
  v.detail << buf;

  // Prime powers p^round(ln p), t = 1: fast / baseline steps, averaged over
  // 40 random (a, n) with n uniform in [m/2, m].
  std::vector<double> ratios;
  for (std::uint32_t j = 1; j <= 12; ++j) {
    const Natural p = first_prime_above_power_of_ten(j);
    const auto e = static_cast<std::uint32_t>(std::max(1.0, std::round(log2_of(p) * std::log(2.0))));
    const FactoredModulus fm = FactoredModulus::from_factors({{p, e}});
    const Natural& m = fm.value();
    const ParameterVector tv(fm, {1});
    double fast = 0, base = 0;
    for (int s = 0; s < 40; ++s) {
      const Natural a = random_unit(rng, m);
      const Natural n = uniform_natural(rng, m / 2, m);
      const CountedResidue r = fast_mod_exp_counted(a, n, fm, tv);
      StepCount b;
      const Natural expect = mod_exp_baseline(a, n, m, &b);
      v.require(r.residue == expect, "prime power residue");
      fast += static_cast<double>(r.steps.multiplications);
      base += static_cast<double>(b.multiplications);
    }
    ratios.push_back(fast / base);
  }
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    v.require(ratios[i] < ratios[i - 1], "ratio not decreasing at j=" + std::to_string(i + 1));
  }
  v.require(ratios.back() < 1, "final ratio " + std::to_string(ratios.back()));
  const auto below = std::find_if(ratios.begin(), ratios.end(), [](double r) { return r < 1; });
  std::snprintf(buf, sizeof buf, "fast/baseline %.3f -> %.3f over P(1..12), first below 1 at P(%d)",
                ratios.front(), ratios.back(), static_cast<int>(below - ratios.begin()) + 1);
  v.detail << buf;
  return v;
}

// ---------------------------------------------------------------- 6

Verdict t_curve() {
  Verdict v;
  const Natural p = 101;
  Natural m;
  mpz_pow_ui(m.get_mpz_t(), p.get_mpz_t(), 200);
  const Natural n = m / 3;
  SweepConfig cfg;
  cfg.measure_time = false;
  const auto pts = sweep_t(p, 200, 13, n, 1, 50, cfg);
  std::vector<Point2> xy;
  for (const auto& pt : pts) xy.push_back({double(pt.t), double(pt.steps_fast)});
  const FitResult fit = fit_t_curve(xy);
  v.require(fit.r_squared >= 0.9, "R^2 = " + std::to_string(fit.r_squared));

  const FactoredModulus fm = FactoredModulus::from_factors({{p, 200}});
  const Natural first = fast_mod_exp(13, n, fm, ParameterVector(fm, {1}));
  int same = 0;
  for (std::uint32_t t = 1; t <= 50; ++t) same += fast_mod_exp(13, n, fm, ParameterVector(fm, {t})) == first;
  v.require(same == 50, std::to_string(same) + "/50 residues identical");
  v.require(first == powm(13, n, m), "residue differs from the oracle");

  const auto best = std::min_element(pts.begin(), pts.end(), [](const BenchPoint& a, const BenchPoint& b) {
    return a.steps_fast < b.steps_fast;
  });
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "fit a=%.3f b=%.3f R^2=%.4f, fitted optimum t=%.2f, fewest steps at t=%u; %d/50 residues identical",
                fit.coefficients[0], fit.coefficients[1], fit.r_squared,
                std::sqrt(fit.coefficients[1] / fit.coefficients[0]), best->t, same);
  v.detail << buf;
  return v;
}

// ---------------------------------------------------------------- 7

Verdict sqrt_curve() {
  Verdict v;
  SweepConfig cfg;
  cfg.measure_time = false;
  const auto pts = sweep_sqrt_family(2, 20, cfg);
  std::vector<Point2> xy;
  for (const auto& pt : pts) xy.push_back({pt.log10_m, pt.step_ratio()});
  const FitResult fit = fit_sqrt_curve(xy);
  v.require(fit.r_squared >= 0.8, "R^2 = " + std::to_string(fit.r_squared));
  char buf[160];
  std::snprintf(buf, sizeof buf, "baseline/fast steps vs log10 m, n=2..20: c=%.4f R^2=%.4f",
                fit.coefficients[0], fit.r_squared);
  v.detail << buf;
  return v;
}

// ---------------------------------------------------------------- 8

double trial_division_niven(std::uint64_t limit) {
  std::uint64_t total = 0;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    std::uint64_t n = k;
    std::uint32_t best = 1;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      std::uint32_t e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      best = std::max(best, e);
    }
    total += best;
  }
  return static_cast<double>(total) / static_cast<double>(limit);
}

Verdict niven() {
  Verdict v;
  const double small = niven_average(10'000);
  const double small_oracle = trial_division_niven(10'000);
  v.require(small == small_oracle, "limit 10^4 differs from trial division");
  const double big = niven_average(1'000'000);
  const double big_oracle = trial_division_niven(1'000'000);
  v.require(big == big_oracle, "limit 10^6 differs from trial division");
  v.require(std::abs(big - 1.705) < 0.05, "|avg - 1.705| = " + std::to_string(std::abs(big - 1.705)));
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "avg(10^6)=%.6f (trial division %.6f), |diff from 1.705|=%.4f; avg(10^4)=%.6f matches",
                big, big_oracle, std::abs(big - 1.705), small);
  v.detail << buf;
  return v;
}

// ---------------------------------------------------------------- 9

Verdict tightness() {
  Verdict v;
  std::mt19937_64 rng(909);
  int moduli = 0, witnessed = 0, strict_pairs = 0, strict_ok = 0, loose_pairs = 0;
  std::uint64_t extra_checks = 0;
  for (const FactoredModulus& fm : prime_power_grid()) {
    ++moduli;
    const Natural& m = fm.value();
    const bool p_is_two = fm.primes()[0] == 2;
    bool modulus_witness = false;
    for (const auto& tv : all_parameter_vectors(fm)) {
      const std::uint64_t l = series_length(fm, tv);
      // Grid inputs: exhaustive for m <= 200, else 300 draws; n in [0, 2m].
      std::vector<std::pair<Natural, Natural>> inputs;
      if (m <= 200) {
        const unsigned long mm = m.get_ui();
        for (unsigned long a = 1; a < mm; ++a) {
          if (std::gcd(a, mm) != 1) continue;
          for (unsigned long n = 0; n <= 2 * mm; ++n) inputs.emplace_back(a, n);
        }
      } else {
        for (int s = 0; s < 300; ++s) inputs.emplace_back(random_unit(rng, m), uniform_natural(rng, 0, 2 * m));
      }
      bool shorter_wrong = false;
      for (const auto& [a, n] : inputs) {
        const Natural expect = powm(a, n, m);
        const Natural full = fast_mod_exp_truncated(a, n, fm, tv, InverseMode::kDirect, l);
        const Natural longer = fast_mod_exp_truncated(a, n, fm, tv, InverseMode::kDirect, l + 1);
        ++extra_checks;
        if (full != expect || longer != expect) {
          v.require(false, "l or l+1 terms wrong for " + fm.to_string() + " t=" + tv.to_string());
        }
        if (!shorter_wrong &&
            fast_mod_exp_truncated(a, n, fm, tv, InverseMode::kDirect, l - 1) != expect) {
          shorter_wrong = true;
        }
      }
      modulus_witness = modulus_witness || shorter_wrong;
      if (p_is_two && tv.t()[0] >= 2) {
        ++loose_pairs;
      } else {
        ++strict_pairs;
        strict_ok += shorter_wrong;
      }
    }
    witnessed += modulus_witness;
    v.require(modulus_witness, "no l-1 witness for " + fm.to_string());
  }
  v.require(strict_ok == strict_pairs, "odd-p or t=1 pair without an l-1 witness");
  v.detail << witnessed << "/" << moduli << " moduli have an l-1 witness; l and l+1 exact on "
           << extra_checks << " inputs; l-1 wrong for " << strict_ok << "/" << strict_pairs
           << " (m, t) pairs with p odd or t=1 (" << loose_pairs
           << " pairs with p=2, t>=2 have 2^(t+1) | c and are not per-t tight)";
  return v;
}

// ---------------------------------------------------------------- 10

Verdict recursive_gap() {
  Verdict v;
  const std::vector<Natural> p18{2, 3};
  const InversePair rec = generate_inverse_pairs(7, 18, p18)[7];
  const InversePair dir = direct_inverse_pair(7, 18, p18);
  v.require(rec.u == 4 && rec.v == 1, "recursive pair (" + rec.u.get_str() + "," + std::to_string(rec.v) + ")");
  v.require(dir.u == 13 && dir.v == 1, "direct pair (" + dir.u.get_str() + "," + std::to_string(dir.v) + ")");

  // Moduli <= 200 whose recursive table (indices <= 30) departs from the
  // direct one somewhere, run end to end.
  int moduli = 0;
  std::uint64_t checks = 0;
  for (std::uint64_t m = 2; m <= 200; ++m) {
    const FactoredModulus fm = factor_small(m);
    const std::uint64_t l = std::min<std::uint64_t>(30, m - 1);
    const InversePairTable a = inverse_pair_table(l, fm.value(), fm.primes(), InverseMode::kRecursive);
    const InversePairTable b = inverse_pair_table(l, fm.value(), fm.primes(), InverseMode::kDirect);
    bool deviates = false;
    for (std::size_t i = 1; i < a.size(); ++i) deviates = deviates || a[i] != b[i];
    if (!deviates) continue;
    ++moduli;
    for (const auto& tv : all_parameter_vectors(fm)) {
      for (std::uint64_t x = 1; x < m; ++x) {
        if (std::gcd(x, m) != 1) continue;
        for (std::uint64_t n = 0; n <= 2 * m; ++n) {
          ++checks;
          const Natural expect = powm(static_cast<unsigned long>(x), static_cast<unsigned long>(n), fm.value());
          if (fast_mod_exp(static_cast<unsigned long>(x), static_cast<unsigned long>(n), fm, tv) != expect) {
            v.require(false, std::to_string(x) + "^" + std::to_string(n) + " mod " + std::to_string(m));
          }
        }
      }
    }
  }
  v.require(moduli > 0, "no deviating modulus found");
  v.detail << "pair(7 mod 18): recursive u=" << rec.u << ", direct u=" << dir.u << "; " << moduli
           << " moduli <= 200 with deviating tables, " << checks << " end-to-end residues exact";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden examples", golden},
      {2, "scalar oracle equivalence", scalar_oracle},
      {3, "matrix/recurrence/Gaussian oracle equivalence", structured_oracle},
      {4, "general linear group orders", gl_orders},
      {5, "complexity shape", complexity_shape},
      {6, "t sweep curve", t_curve},
      {7, "sqrt ratio curve", sqrt_curve},
      {8, "Niven average", niven},
      {9, "series tightness", tightness},
      {10, "recursive inverse pair gap", recursive_gap},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d %s (%.1fs): %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                v.detail.str().c_str());
    std::fflush(stdout);
    failed += !v.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
