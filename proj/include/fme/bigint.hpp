#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace fme {

using Natural = mpz_class;

// Decimal naturals only: no sign, no hex, no whitespace.
Natural parse_natural(std::string_view text);

// Optional leading '-' followed by decimal digits.
mpz_class parse_integer(std::string_view text);

inline std::string to_decimal(const mpz_class& x) { return x.get_str(10); }

// Least non-negative residue of x modulo m (m > 0).
inline mpz_class mod_floor(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline std::size_t bit_length(const mpz_class& x) {
  return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline mpz_class from_u64(std::uint64_t x) {
  mpz_class r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
  return r;
}

// Caller guarantees x fits.
inline std::uint64_t to_u64(const mpz_class& x) {
  std::uint64_t r = 0;
  mpz_export(&r, nullptr, 1, sizeof(r), 0, 0, x.get_mpz_t());
  return r;
}

inline bool fits_u64(const mpz_class& x) {
  return x >= 0 && bit_length(x) <= 64;
}

// Uniform in [lo, hi], consuming whole 64-bit words from rng so that a
// seeded generator reproduces the same sequence everywhere.
Natural uniform_natural(std::mt19937_64& rng, const Natural& lo, const Natural& hi);

// log2(x) for x > 0, accurate to double precision for arbitrarily large x.
double log2_of(const mpz_class& x);

}  // namespace fme
