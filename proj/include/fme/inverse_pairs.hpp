#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "fme/bigint.hpp"
#include "fme/steps.hpp"

namespace fme {

// (u, v) for an index a >= 1: v is the part of a made of the modulus primes
// and u is the inverse of a / v. Index 0 carries the sentinel (0, 0).
struct InversePair {
  Natural u;
  std::uint64_t v = 0;

  friend bool operator==(const InversePair&, const InversePair&) = default;
};

enum class InverseMode {
  kRecursive,  // table built by the linear recursion, O(l) memory
  kDirect,     // each inverse from extended Euclid, O(1) memory
};

InverseMode parse_inverse_mode(std::string_view text);
std::string_view to_string(InverseMode mode);

class InversePairTable {
 public:
  InversePairTable(Natural modulus, std::vector<Natural> primes);

  const InversePair& operator[](std::size_t i) const { return pairs_[i]; }
  std::size_t size() const { return pairs_.size(); }
  const Natural& modulus() const { return modulus_; }
  const std::vector<Natural>& primes() const { return primes_; }
  std::span<const InversePair> pairs() const { return pairs_; }

  void push_back(InversePair pair) { pairs_.push_back(std::move(pair)); }

 private:
  std::vector<InversePair> pairs_;
  Natural modulus_;
  std::vector<Natural> primes_;
};

struct ExtGcdResult {
  mpz_class g;
  mpz_class x;
  mpz_class y;
};

// g = gcd(a, b) = a*x + b*y. a and b not both zero.
ExtGcdResult ext_gcd(const mpz_class& a, const mpz_class& b);

// prod p^nu(i, p) over the modulus primes. i >= 1.
std::uint64_t v_part(std::uint64_t i, std::span<const Natural> primes);

// One step of the linear recursion, taken literally:
//   v = v_part(i)
//   v == 1: u = (L[m % i].u * ((m - m / i) / L[m % i].v)) % m
//   v  > 1: u = L[i / v].u
// For i coprime to m whose m % i shares a prime with m the result is not the
// true inverse (m = 18, i = 7 gives u = 4). Whole-series results are still
// exact; see fast_mod_exp.
InversePair next_inverse_pair(std::uint64_t i, const Natural& m,
                              const InversePairTable& table,
                              std::span<const Natural> primes,
                              StepCount* steps = nullptr);

// Pairs 0..l seeded with (0,0), (1,1) and extended by next_inverse_pair.
InversePairTable generate_inverse_pairs(std::uint64_t l, const Natural& m,
                                        std::span<const Natural> primes,
                                        StepCount* steps = nullptr);

// v = v_part(i) and u = (i / v)^-1 mod m via ext_gcd. Throws NotCoprime if
// i / v is not a unit mod m.
InversePair direct_inverse_pair(std::uint64_t i, const Natural& m,
                                std::span<const Natural> primes,
                                StepCount* steps = nullptr);

// Table 0..l in either mode.
InversePairTable inverse_pair_table(std::uint64_t l, const Natural& m,
                                    std::span<const Natural> primes, InverseMode mode,
                                    StepCount* steps = nullptr);

}  // namespace fme
