#include "fme/inverse_pairs.hpp"

#include <string>

#include "fme/errors.hpp"

namespace fme {

InverseMode parse_inverse_mode(std::string_view text) {
  if (text == "recursive") return InverseMode::kRecursive;
  if (text == "direct") return InverseMode::kDirect;
  throw ParseError("unknown inverse mode '" + std::string(text) + "' (recursive|direct)");
}

std::string_view to_string(InverseMode mode) {
  return mode == InverseMode::kRecursive ? "recursive" : "direct";
}

InversePairTable::InversePairTable(Natural modulus, std::vector<Natural> primes)
    : modulus_(std::move(modulus)), primes_(std::move(primes)) {
  pairs_.push_back({0, 0});
  pairs_.push_back({1, 1});
}

ExtGcdResult ext_gcd(const mpz_class& a, const mpz_class& b) {
  if (a == 0 && b == 0) throw DomainError("ext_gcd(0, 0) is undefined");
  // Invariants: old_r = a*old_x + b*old_y, r = a*x + b*y.
  mpz_class old_r = a, r = b;
  mpz_class old_x = 1, x = 0;
  mpz_class old_y = 0, y = 1;
  mpz_class q, tmp;
  while (r != 0) {
    mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_x - q * x;
    old_x = x;
    x = tmp;
    tmp = old_y - q * y;
    old_y = y;
    y = tmp;
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

std::uint64_t v_part(std::uint64_t i, std::span<const Natural> primes) {
  if (i == 0) throw DomainError("v_part is undefined at 0");
  std::uint64_t v = 1;
  for (const Natural& p : primes) {
    if (!fits_u64(p)) continue;  // p > i cannot divide i
    const std::uint64_t q = to_u64(p);
    while (i % q == 0) {
      i /= q;
      v *= q;
    }
  }
  return v;
}

InversePair next_inverse_pair(std::uint64_t i, const Natural& m,
                              const InversePairTable& table,
                              std::span<const Natural> primes, StepCount* steps) {
  if (i < 2) throw DomainError("next_inverse_pair needs i >= 2");
  if (table.size() < i) {
    throw IndexError("inverse pair table has " + std::to_string(table.size()) +
                     " entries; index " + std::to_string(i) + " needs " +
                     std::to_string(i));
  }
  const std::uint64_t v = v_part(i, primes);
  if (v != 1) return {table[i / v].u, v};

  const Natural divisor = from_u64(i);
  Natural quotient, remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), m.get_mpz_t(), divisor.get_mpz_t());
  const InversePair& prev = table[to_u64(remainder)];
  if (prev.v == 0) throw DomainError("recursion reached the sentinel pair (i divides m)");

  Natural scaled = m - quotient;
  if (prev.v != 1) {
    mpz_fdiv_q_ui(scaled.get_mpz_t(), scaled.get_mpz_t(), prev.v);
    if (steps) ++steps->divisions;
  }
  Natural u = prev.u * scaled;
  mpz_mod(u.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
  if (steps) ++steps->multiplications;
  return {std::move(u), 1};
}

InversePairTable generate_inverse_pairs(std::uint64_t l, const Natural& m,
                                        std::span<const Natural> primes, StepCount* steps) {
  if (l < 1) throw DomainError("inverse pair table length must be at least 1");
  InversePairTable table(m, std::vector<Natural>(primes.begin(), primes.end()));
  for (std::uint64_t j = 2; j <= l; ++j) {
    table.push_back(next_inverse_pair(j, m, table, primes, steps));
  }
  return table;
}

InversePair direct_inverse_pair(std::uint64_t i, const Natural& m,
                                std::span<const Natural> primes, StepCount* steps) {
  if (i < 1) throw DomainError("direct_inverse_pair needs i >= 1");
  const std::uint64_t v = v_part(i, primes);
  const Natural unit_part = from_u64(i / v);
  if (unit_part == 1) return {1 % m, v};
  ExtGcdResult r = ext_gcd(unit_part, m);
  if (steps) ++steps->inversions;
  if (r.g != 1) {
    throw NotCoprime(to_decimal(unit_part) + " is not invertible modulo " + to_decimal(m));
  }
  return {mod_floor(r.x, m), v};
}

InversePairTable inverse_pair_table(std::uint64_t l, const Natural& m,
                                    std::span<const Natural> primes, InverseMode mode,
                                    StepCount* steps) {
  if (mode == InverseMode::kRecursive) return generate_inverse_pairs(l, m, primes, steps);
  if (l < 1) throw DomainError("inverse pair table length must be at least 1");
  InversePairTable table(m, std::vector<Natural>(primes.begin(), primes.end()));
  for (std::uint64_t j = 2; j <= l; ++j) {
    table.push_back(direct_inverse_pair(j, m, primes, steps));
  }
  return table;
}

}  // namespace fme
