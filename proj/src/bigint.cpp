#include "fme/bigint.hpp"

#include <cmath>

#include "fme/errors.hpp"

namespace fme {

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw ParseError("expected a decimal natural, got an empty string");
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw ParseError("expected a decimal natural, got '" + std::string(text) + "'");
    }
  }
  return Natural(std::string(text), 10);
}

mpz_class parse_integer(std::string_view text) {
  if (!text.empty() && text.front() == '-') {
    return -parse_natural(text.substr(1));
  }
  return parse_natural(text);
}

double log2_of(const mpz_class& x) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

Natural uniform_natural(std::mt19937_64& rng, const Natural& lo, const Natural& hi) {
  if (hi < lo) throw DomainError("empty range for uniform_natural");
  const Natural span = hi - lo + 1;
  const std::size_t bits = bit_length(span);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t top_bits = bits - (words - 1) * 64;
  std::vector<std::uint64_t> limbs(words);
  Natural candidate;
  // Rejection sampling on the smallest enclosing power of two.
  while (true) {
    for (auto& w : limbs) w = rng();
    if (top_bits < 64) limbs[0] &= (std::uint64_t{1} << top_bits) - 1;
    mpz_import(candidate.get_mpz_t(), words, 1, sizeof(std::uint64_t), 0, 0, limbs.data());
    if (candidate < span) return lo + candidate;
  }
}

}  // namespace fme
