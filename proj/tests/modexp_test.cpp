#include <doctest.h>

#include <random>

#include "fme/errors.hpp"
#include "fme/modexp.hpp"

using namespace fme;

namespace {

Natural powm(const Natural& a, const Natural& n, const Natural& m) {
  Natural r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Every parameter vector 1 <= t_i <= e_i.
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

Natural random_unit(std::mt19937_64& rng, const Natural& m) {
  while (true) {
    Natural a = uniform_natural(rng, 1, m - 1);
    if (gcd(a, m) == 1) return a;
  }
}

}  // namespace

TEST_CASE("baseline exponentiation") {
  CHECK(mod_exp_baseline(7, 3, 1331) == 343);
  CHECK(mod_exp_baseline(7, 0, 1331) == 1);
  CHECK(mod_exp_baseline(7, 0, 1) == 0);

  Natural naive = 1;
  for (int i = 0; i < 117; ++i) naive = naive * 5 % 997;
  CHECK(mod_exp_baseline(5, 117, 997) == naive);

  std::mt19937_64 rng(7);
  for (int k = 0; k < 300; ++k) {
    const Natural m = uniform_natural(rng, 2, Natural(1) << 200);
    const Natural a = uniform_natural(rng, 0, m - 1);
    const Natural n = uniform_natural(rng, 0, Natural(1) << 300);
    REQUIRE(mod_exp_baseline(a, n, m) == powm(a, n, m));
  }

  // n = 2^k costs k squarings, n = 2^k - 1 costs 2(k - 1).
  StepCount s;
  (void)mod_exp_baseline(3, Natural(1) << 10, 1000003, &s);
  CHECK(s.multiplications == 10);
  StepCount s2;
  (void)mod_exp_baseline(3, (Natural(1) << 10) - 1, 1000003, &s2);
  CHECK(s2.multiplications == 18);
}

TEST_CASE("series length") {
  const FactoredModulus a = parse_factored_modulus("11^3");
  CHECK(series_length(a, ParameterVector(a, {1})) == 3);
  CHECK(series_length(a, ParameterVector(a, {3})) == 1);
  const FactoredModulus b = parse_factored_modulus("2^3*3^5");
  CHECK(series_length(b, ParameterVector(b, {2, 2})) == 3);
  const FactoredModulus c = parse_factored_modulus("101^200");
  CHECK(series_length(c, ParameterVector(c, {14})) == 15);
  CHECK(series_length(c, ParameterVector(c, {50})) == 4);
}

TEST_CASE("golden residues") {
  const FactoredModulus fm = parse_factored_modulus("11^3");
  const ParameterVector t1(fm, {1});
  CHECK(fast_mod_exp(7, 123, fm, t1) == 1234);
  CHECK(fast_mod_exp(7, 123, fm, t1, InverseMode::kDirect) == 1234);
  CHECK(fast_mod_exp(7, 120, fm, t1) == powm(7, 120, 1331));
  CHECK(fast_mod_exp(7, 0, fm, t1) == 1);
  CHECK(fast_mod_exp(1330, 1, fm, t1) == 1330);

  const FactoredModulus twenty = parse_factored_modulus("2^2*5");
  CHECK(fast_mod_exp(3, 1000, twenty, ParameterVector::all_ones(twenty)) == powm(3, 1000, 20));
}

TEST_CASE("argument errors") {
  const FactoredModulus fm = parse_factored_modulus("11^3");
  CHECK_THROWS_AS(fast_mod_exp(22, 5, fm, ParameterVector(fm, {1})), NotCoprime);
  CHECK_THROWS_AS(fast_mod_exp(0, 5, fm, ParameterVector(fm, {1})), NotCoprime);
  const FactoredModulus other = parse_factored_modulus("13^3");
  CHECK_THROWS_AS(fast_mod_exp(2, 5, fm, ParameterVector(other, {1})), ParameterOutOfRange);
  const FactoredModulus two = parse_factored_modulus("2*11^3");
  CHECK_THROWS_AS(fast_mod_exp(3, 5, fm, ParameterVector(two, {1, 1})), ParameterOutOfRange);
}

TEST_CASE("exhaustive small moduli, both modes") {
  // Every modulus up to 200.
  std::vector<FactoredModulus> moduli;
  for (unsigned long m = 2; m <= 200; ++m) {
    std::vector<PrimePower> f;
    unsigned long r = m;
    for (unsigned long d = 2; d <= r; ++d) {
      std::uint32_t k = 0;
      while (r % d == 0) {
        r /= d;
        ++k;
      }
      if (k) f.push_back({Natural(d), k});
    }
    moduli.push_back(FactoredModulus::from_factors(f));
  }
  for (const FactoredModulus& fm : moduli) {
    const unsigned long m = fm.value().get_ui();
    for (const ParameterVector& tv : all_parameter_vectors(fm)) {
      for (unsigned long a = 1; a < m; ++a) {
        if (std::gcd(a, m) != 1) continue;
        for (unsigned long n : {0UL, 1UL, 2UL, 5UL, 37UL, 1000UL, 123457UL}) {
          const Natural expect = powm(a, n, m);
          REQUIRE(fast_mod_exp(a, n, fm, tv) == expect);
          REQUIRE(fast_mod_exp(a, n, fm, tv, InverseMode::kDirect) == expect);
        }
      }
    }
  }
}

TEST_CASE("random large moduli agree with the oracle") {
  std::mt19937_64 rng(2024);
  const std::vector<const char*> specs = {
      "2^64", "3^40*5^7", "101^200", "11^30*13^9*17^4", "2^10*3^10*5^10*7^10",
      "1000003^5", "18446744073709551557^3", "7^100"};
  for (const char* text : specs) {
    const FactoredModulus fm = parse_factored_modulus(text);
    std::vector<std::uint32_t> t(fm.size());
    for (int trial = 0; trial < 12; ++trial) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        t[i] = static_cast<std::uint32_t>(uniform_natural(rng, 1, fm.exponents()[i]).get_ui());
      }
      const ParameterVector tv(fm, t);
      const Natural a = random_unit(rng, fm.value());
      const Natural n = uniform_natural(rng, 0, Natural(1) << 2000);
      const Natural expect = powm(a, n, fm.value());
      REQUIRE(fast_mod_exp(a, n, fm, tv) == expect);
      REQUIRE(fast_mod_exp(a, n, fm, tv, InverseMode::kDirect) == expect);
    }
  }
}

TEST_CASE("results are deterministic") {
  const FactoredModulus fm = parse_factored_modulus("3^40*5^7");
  const ParameterVector tv(fm, {4, 2});
  const Natural n("98765432109876543210987654321");
  const CountedResidue first = fast_mod_exp_counted(2, n, fm, tv);
  for (int i = 0; i < 5; ++i) {
    const CountedResidue again = fast_mod_exp_counted(2, n, fm, tv);
    CHECK(again.residue == first.residue);
    CHECK(again.steps == first.steps);
  }
}

namespace {

// True when every sampled (a, n) gives the right residue with `terms` terms.
bool terms_suffice(const FactoredModulus& fm, const ParameterVector& tv, std::uint64_t terms,
                   std::mt19937_64& rng) {
  const Natural& m = fm.value();
  for (int k = 0; k < 300; ++k) {
    const Natural a = random_unit(rng, m);
    const Natural n = uniform_natural(rng, 0, Natural(1) << 64);
    if (fast_mod_exp_truncated(a, n, fm, tv, InverseMode::kDirect, terms) != powm(a, n, m)) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("series length on prime powers") {
  std::mt19937_64 rng(5);
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
    for (std::uint32_t e = 1; e <= 6; ++e) {
      const FactoredModulus fm = FactoredModulus::from_factors({{Natural(p), e}});
      for (std::uint32_t t = 1; t <= e; ++t) {
        CAPTURE(p);
        CAPTURE(e);
        CAPTURE(t);
        const ParameterVector tv(fm, {t});
        const std::uint64_t l = series_length(fm, tv);
        CHECK(l == (e + t - 1) / t);
        CHECK(terms_suffice(fm, tv, l, rng));
        CHECK(terms_suffice(fm, tv, l + 1, rng));
        if (p != 2 || t == 1) {
          // c has valuation exactly t for most a, so l is the least count.
          CHECK_FALSE(terms_suffice(fm, tv, l - 1, rng));
        } else {
          // Units mod 2^(t+1) have exponent 2^(t-1), so 2^(t+1) | c and
          // ceil(e / (t + 1)) terms already give the exact residue.
          const std::uint64_t need = (e + t) / (t + 1);
          CHECK(terms_suffice(fm, tv, need, rng));
          CHECK_FALSE(terms_suffice(fm, tv, need - 1, rng));
        }
      }
    }
  }
}

TEST_CASE("step count stays within the analytic bound") {
  // mulmods <= 2*bitlen(phi) + 2*bitlen(r) + 5*l + small constant.
  std::mt19937_64 rng(11);
  for (const char* text : {"11^3", "101^200", "3^40*5^7", "2^64", "1000003^5"}) {
    const FactoredModulus fm = parse_factored_modulus(text);
    for (const ParameterVector& tv : {ParameterVector::all_ones(fm)}) {
      const Natural phi = tv.phi();
      const std::uint64_t l = series_length(fm, tv);
      for (int k = 0; k < 20; ++k) {
        const Natural a = random_unit(rng, fm.value());
        const Natural n = uniform_natural(rng, 0, Natural(1) << 4000);
        const CountedResidue r = fast_mod_exp_counted(a, n, fm, tv);
        REQUIRE(r.residue == powm(a, n, fm.value()));
        const std::uint64_t bound = 4 * bit_length(phi) + 5 * l + 4;
        REQUIRE(r.steps.multiplications <= bound);
      }
    }
  }
}

TEST_CASE("a^phi(T) - 1 is divisible by T") {
  std::mt19937_64 rng(3);
  for (const char* text : {"11^3", "2^2*5", "3^4*5^3*7", "2^10"}) {
    const FactoredModulus fm = parse_factored_modulus(text);
    for (const ParameterVector& tv : all_parameter_vectors(fm)) {
      for (int k = 0; k < 30; ++k) {
        const Natural a = random_unit(rng, fm.value());
        const Natural c = mod_floor(powm(a, tv.phi(), fm.value()) - 1, fm.value());
        REQUIRE(c % tv.sub_modulus() == 0);
        Natural cl = 1;
        for (std::uint64_t i = 0; i < series_length(fm, tv); ++i) cl *= c;
        REQUIRE(cl % fm.value() == 0);
      }
    }
  }
}
