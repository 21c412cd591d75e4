#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fme/bigint.hpp"
#include "fme/numtheory.hpp"

namespace fme {

// Square matrix over Z/mZ, row-major, every entry in [0, m).
class MatrixModM {
 public:
  MatrixModM(std::size_t d, Natural modulus);  // zero matrix
  MatrixModM(std::size_t d, Natural modulus, std::vector<Natural> entries);

  static MatrixModM identity(std::size_t d, const Natural& modulus);

  std::size_t dim() const { return d_; }
  const Natural& modulus() const { return modulus_; }
  const Natural& operator()(std::size_t r, std::size_t c) const { return entries_[r * d_ + c]; }
  const std::vector<Natural>& entries() const { return entries_; }

  void set(std::size_t r, std::size_t c, const mpz_class& value);

  // Exact determinant of the stored representatives, reduced mod m.
  Natural determinant_mod() const;

  // "a,b;c,d"
  std::string to_string() const;

  friend bool operator==(const MatrixModM&, const MatrixModM&) = default;

 private:
  std::size_t d_;
  Natural modulus_;
  std::vector<Natural> entries_;
};

// Rows separated by ';', entries by ','. Entries may be negative and are
// reduced into [0, m).
MatrixModM parse_matrix(std::string_view text, const Natural& modulus);

// Schoolbook d^3 product. Throws DimensionMismatch.
MatrixModM mat_mul_mod(const MatrixModM& a, const MatrixModM& b);

MatrixModM mat_add_mod(const MatrixModM& a, const MatrixModM& b);
MatrixModM mat_scale_mod(const MatrixModM& a, const Natural& scalar);

// A^n by repeated squaring, A^0 = I.
MatrixModM mat_pow_baseline(const MatrixModM& a, const Natural& n);

// |GL_d(Z/NZ)| for N = prod p_i^k_i:
//   prod_i p_i^((k_i - 1) d^2) prod_{j<d} (p_i^d - p_i^j)
Natural gl_order(std::size_t d, const FactoredModulus& fm);

// The factorization of T = prod p_i^t_i.
FactoredModulus sub_modulus_factors(const FactoredModulus& fm, const ParameterVector& tv);

// A^n via n = M*|GL_d(Z/TZ)| + r and (I + B)^M with B = A^|GL| - I, whose
// entries are all divisible by T. Requires A.modulus() == fm.value() and
// det(A) a unit mod m.
MatrixModM mat_fast_exp(const MatrixModM& a, const Natural& n, const FactoredModulus& fm,
                        const ParameterVector& tv);

// u_{n+d} = c_{d-1} u_{n+d-1} + ... + c_0 u_n.
struct RecurrenceSpec {
  std::vector<mpz_class> coeffs;  // c_{d-1}, ..., c_0
  std::vector<mpz_class> init;    // u_0, ..., u_{d-1}
};

// Companion matrix: top row c_{d-1}..c_0, ones on the subdiagonal.
// Throws NotCoprime if gcd(c_0, m) != 1.
MatrixModM companion_matrix(const RecurrenceSpec& spec, const Natural& m);

// u_N mod m.
Natural recurrence_term(const RecurrenceSpec& spec, const Natural& index,
                        const FactoredModulus& fm, const ParameterVector& tv);

// Element re + im*i of Z[i] / p^k.
struct GaussianResidue {
  Natural re;
  Natural im;

  friend bool operator==(const GaussianResidue&, const GaussianResidue&) = default;
};

GaussianResidue gaussian_mul(const GaussianResidue& x, const GaussianResidue& y,
                             const Natural& modulus);

// Square-and-multiply in the ring; the reference for gaussian_fast_exp.
GaussianResidue gaussian_pow_baseline(const GaussianResidue& z, const Natural& n,
                                      const Natural& modulus);

// z^n in Z[i]/p^k for p = 3 (mod 4), exponent reduced modulo p^2 - 1 (the
// unit group order of F_{p^2}) with series length k.
// Throws UnsupportedPrime for p = 2 or p = 1 (mod 4), NotUnit if p | re^2+im^2.
GaussianResidue gaussian_fast_exp(const GaussianResidue& z, const Natural& n, const Natural& p,
                                  std::uint32_t k);

std::string to_string(const GaussianResidue& z);  // "re+im*i"

}  // namespace fme
