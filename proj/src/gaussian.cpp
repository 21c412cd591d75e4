#include "fme/errors.hpp"
#include "fme/matrix.hpp"
#include "fme/modexp.hpp"

namespace fme {

GaussianResidue gaussian_mul(const GaussianResidue& x, const GaussianResidue& y,
                             const Natural& modulus) {
  return {mod_floor(x.re * y.re - x.im * y.im, modulus),
          mod_floor(x.re * y.im + x.im * y.re, modulus)};
}

GaussianResidue gaussian_pow_baseline(const GaussianResidue& z, const Natural& n,
                                      const Natural& modulus) {
  if (n < 0) throw DomainError("exponent must be non-negative");
  const GaussianResidue base{mod_floor(z.re, modulus), mod_floor(z.im, modulus)};
  if (n == 0) return {Natural(1) % modulus, 0};
  GaussianResidue result = base;
  for (std::size_t bit = bit_length(n) - 1; bit-- > 0;) {
    result = gaussian_mul(result, result, modulus);
    if (mpz_tstbit(n.get_mpz_t(), bit)) result = gaussian_mul(result, base, modulus);
  }
  return result;
}

GaussianResidue gaussian_fast_exp(const GaussianResidue& z, const Natural& n, const Natural& p,
                                  std::uint32_t k) {
  if (k < 1) throw ParameterOutOfRange("k must be at least 1");
  if (!is_prime(p)) throw InvalidFactorization(to_decimal(p) + " is not prime");
  if (p == 2 || mpz_fdiv_ui(p.get_mpz_t(), 4) != 3) {
    throw UnsupportedPrime("Gaussian exponentiation needs p = 3 (mod 4), got " + to_decimal(p));
  }
  if (n < 0) throw DomainError("exponent must be non-negative");
  Natural modulus;
  mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), k);
  const GaussianResidue base{mod_floor(z.re, modulus), mod_floor(z.im, modulus)};
  const Natural norm = base.re * base.re + base.im * base.im;
  if (mpz_divisible_p(norm.get_mpz_t(), p.get_mpz_t())) {
    throw NotUnit(to_string(base) + " has norm divisible by " + to_decimal(p));
  }

  // Z[i]/p is F_{p^2}; its unit group has order p^2 - 1.
  const Natural unit_order = p * p - 1;
  Natural quotient, remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), n.get_mpz_t(),
              unit_order.get_mpz_t());

  GaussianResidue c = gaussian_pow_baseline(base, unit_order, modulus);
  c.re = mod_floor(c.re - 1, modulus);

  const std::vector<Natural> primes{p};
  BinomialCoefficients coeffs(quotient, k, modulus, primes, InverseMode::kRecursive);
  GaussianResidue acc{0, 0};
  GaussianResidue power{Natural(1) % modulus, 0};
  for (std::uint64_t i = 0;; ++i) {
    const Natural coef = coeffs.current();
    acc.re = mod_floor(acc.re + coef * power.re, modulus);
    acc.im = mod_floor(acc.im + coef * power.im, modulus);
    if (i + 1 >= coeffs.count()) break;
    power = gaussian_mul(power, c, modulus);
    coeffs.advance();
  }
  return gaussian_mul(acc, gaussian_pow_baseline(base, remainder, modulus), modulus);
}

std::string to_string(const GaussianResidue& z) {
  return to_decimal(z.re) + "+" + to_decimal(z.im) + "*i";
}

}  // namespace fme
