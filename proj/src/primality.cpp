#include <array>

#include "fme/numtheory.hpp"

namespace fme {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool strong_probable_prime(u64 n, u64 base, u64 d, int s) {
  u64 x = pow_mod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set for all n < 2^64.
  for (u64 a : kBases) {
    if (!strong_probable_prime(n, a, d, s)) return false;
  }
  return true;
}

bool is_prime(const Natural& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(to_u64(n));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Natural next_prime(const Natural& n) {
  Natural candidate = n + 1;
  if (candidate <= 2) return 2;
  if (mpz_even_p(candidate.get_mpz_t())) ++candidate;
  while (!is_prime(candidate)) candidate += 2;
  return candidate;
}

}  // namespace fme
