#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fme/bigint.hpp"

namespace fme {

struct PrimePower {
  Natural prime;
  std::uint32_t exponent = 1;
};

// A modulus given by its canonical factorization m = prod p_i^e_i.
// Primes are strictly increasing; value() caches the product.
class FactoredModulus {
 public:
  // Sorts the factors and checks them. With trust_factors the primality
  // test is skipped; duplicate primes and zero exponents are still rejected.
  static FactoredModulus from_factors(std::vector<PrimePower> factors,
                                      bool trust_factors = false);

  const std::vector<Natural>& primes() const { return primes_; }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  const Natural& value() const { return value_; }
  std::size_t size() const { return primes_.size(); }
  std::uint32_t max_exponent() const;

  // "2^3*5*11^4": ascending primes, "^1" omitted.
  std::string to_string() const;

  friend bool operator==(const FactoredModulus&, const FactoredModulus&) = default;

 private:
  FactoredModulus() = default;

  std::vector<Natural> primes_;
  std::vector<std::uint32_t> exponents_;
  Natural value_ = 1;
};

// Grammar: p(^e)?(*p(^e)?)* with decimal naturals.
FactoredModulus parse_factored_modulus(std::string_view text,
                                       bool trust_factors = false);

// Tuning vector t with 1 <= t_i <= e_i, plus the derived sub-modulus
// T = prod p_i^t_i and phi(T) = prod p_i^(t_i - 1) (p_i - 1).
class ParameterVector {
 public:
  ParameterVector(const FactoredModulus& fm, std::vector<std::uint32_t> t);

  static ParameterVector all_ones(const FactoredModulus& fm);

  const std::vector<std::uint32_t>& t() const { return t_; }
  const Natural& sub_modulus() const { return sub_modulus_; }
  const Natural& phi() const { return phi_; }

  // Throws ParameterOutOfRange unless this vector is valid for fm.
  void check_against(const FactoredModulus& fm) const;

  std::string to_string() const;  // "t1,t2,..."

 private:
  std::vector<std::uint32_t> t_;
  Natural sub_modulus_;
  Natural phi_;
};

// "1,2,3" -> {1,2,3}; each entry a positive 32-bit decimal.
std::vector<std::uint32_t> parse_parameter_list(std::string_view text);

// Exact non-negative rational num/den in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den);
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<unsigned __int128>(a.num) * b.den <
           static_cast<unsigned __int128>(b.num) * a.den;
  }
};

// Largest k with p^k | n. Throws DomainError for n = 0 or p < 2.
std::uint32_t valuation(const Natural& n, const Natural& p);
std::uint32_t valuation(std::uint64_t n, std::uint64_t p);

Natural radical(const FactoredModulus& fm);

// H_T(m) = max_i e_i / t_i.
Rational height(const FactoredModulus& fm, const ParameterVector& tv);

inline const Natural& euler_phi_of_sub_modulus(const ParameterVector& tv) {
  return tv.phi();
}

// Primality: deterministic Miller-Rabin below 2^64, 40 probabilistic
// rounds above.
bool is_prime(const Natural& n);
bool is_prime_u64(std::uint64_t n);

// Smallest prime strictly greater than n.
Natural next_prime(const Natural& n);

inline constexpr std::uint64_t kDefaultSieveCap = 10'000'000;

// Reads FME_SIEVE_CAP from the environment, falling back to the default.
std::uint64_t sieve_cap_from_env();

// spf[n] is the smallest prime factor of n for 2 <= n <= limit;
// spf[0] = spf[1] = 0.
class SpfTable {
 public:
  explicit SpfTable(std::vector<std::uint32_t> spf) : spf_(std::move(spf)) {}

  std::uint32_t operator[](std::size_t n) const { return spf_[n]; }
  std::uint64_t limit() const { return spf_.size() - 1; }

  // Largest exponent in the factorization of n; 1 for n = 1.
  std::uint32_t max_exponent(std::uint64_t n) const;

 private:
  std::vector<std::uint32_t> spf_;
};

SpfTable spf_sieve(std::uint64_t limit, std::uint64_t cap = kDefaultSieveCap);

// (1/limit) * sum_{k <= limit} H(k), with H(1) = 1.
double niven_average(std::uint64_t limit, std::uint64_t cap = kDefaultSieveCap);

}  // namespace fme
