#include "fme/matrix.hpp"

#include "fme/errors.hpp"
#include "fme/modexp.hpp"

namespace fme {

MatrixModM::MatrixModM(std::size_t d, Natural modulus)
    : d_(d), modulus_(std::move(modulus)), entries_(d * d, Natural(0)) {
  if (d_ == 0) throw DimensionMismatch("matrix dimension must be at least 1");
  if (modulus_ < 2) throw DomainError("matrix modulus must be at least 2");
}

MatrixModM::MatrixModM(std::size_t d, Natural modulus, std::vector<Natural> entries)
    : MatrixModM(d, std::move(modulus)) {
  if (entries.size() != d * d) {
    throw DimensionMismatch("expected " + std::to_string(d * d) + " entries, got " +
                            std::to_string(entries.size()));
  }
  for (std::size_t i = 0; i < entries.size(); ++i) entries_[i] = mod_floor(entries[i], modulus_);
}

MatrixModM MatrixModM::identity(std::size_t d, const Natural& modulus) {
  MatrixModM id(d, modulus);
  for (std::size_t i = 0; i < d; ++i) id.entries_[i * d + i] = 1;
  return id;
}

void MatrixModM::set(std::size_t r, std::size_t c, const mpz_class& value) {
  entries_[r * d_ + c] = mod_floor(value, modulus_);
}

Natural MatrixModM::determinant_mod() const {
  // Bareiss fraction-free elimination; every division is exact.
  std::vector<mpz_class> a(entries_.begin(), entries_.end());
  const std::size_t n = d_;
  mpz_class prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row * n + k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[swap_row * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), num.get_mpz_t(), prev_pivot.get_mpz_t());
      }
    }
    prev_pivot = a[k * n + k];
  }
  return mod_floor(sign * a[n * n - 1], modulus_);
}

std::string MatrixModM::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < d_; ++r) {
    if (r > 0) out += ';';
    for (std::size_t c = 0; c < d_; ++c) {
      if (c > 0) out += ',';
      out += to_decimal((*this)(r, c));
    }
  }
  return out;
}

MatrixModM parse_matrix(std::string_view text, const Natural& modulus) {
  std::vector<std::vector<mpz_class>> rows;
  std::size_t pos = 0;
  while (true) {
    std::size_t semi = text.find(';', pos);
    std::string_view row = text.substr(pos, semi == text.npos ? text.npos : semi - pos);
    std::vector<mpz_class> values;
    std::size_t rpos = 0;
    while (true) {
      std::size_t comma = row.find(',', rpos);
      values.push_back(parse_integer(row.substr(rpos, comma == row.npos ? row.npos : comma - rpos)));
      if (comma == row.npos) break;
      rpos = comma + 1;
    }
    rows.push_back(std::move(values));
    if (semi == text.npos) break;
    pos = semi + 1;
  }
  const std::size_t d = rows.size();
  std::vector<Natural> entries;
  for (const auto& row : rows) {
    if (row.size() != d) {
      throw ParseError("matrix must be square: " + std::to_string(d) + " rows but a row has " +
                       std::to_string(row.size()) + " entries");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return MatrixModM(d, modulus, std::move(entries));
}

namespace {

void require_compatible(const MatrixModM& a, const MatrixModM& b) {
  if (a.dim() != b.dim() || a.modulus() != b.modulus()) {
    throw DimensionMismatch("matrices differ in dimension or modulus");
  }
}

}  // namespace

MatrixModM mat_mul_mod(const MatrixModM& a, const MatrixModM& b) {
  require_compatible(a, b);
  const std::size_t d = a.dim();
  std::vector<Natural> out(d * d);
  mpz_class acc;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      acc = 0;
      for (std::size_t k = 0; k < d; ++k) {
        mpz_addmul(acc.get_mpz_t(), a(r, k).get_mpz_t(), b(k, c).get_mpz_t());
      }
      mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), a.modulus().get_mpz_t());
      out[r * d + c] = acc;
    }
  }
  return MatrixModM(d, a.modulus(), std::move(out));
}

MatrixModM mat_add_mod(const MatrixModM& a, const MatrixModM& b) {
  require_compatible(a, b);
  std::vector<Natural> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.entries()[i] + b.entries()[i];
  return MatrixModM(a.dim(), a.modulus(), std::move(out));
}

MatrixModM mat_scale_mod(const MatrixModM& a, const Natural& scalar) {
  std::vector<Natural> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.entries()[i] * scalar;
  return MatrixModM(a.dim(), a.modulus(), std::move(out));
}

MatrixModM mat_pow_baseline(const MatrixModM& a, const Natural& n) {
  if (n < 0) throw DomainError("exponent must be non-negative");
  MatrixModM result = MatrixModM::identity(a.dim(), a.modulus());
  if (n == 0) return result;
  result = a;
  for (std::size_t bit = bit_length(n) - 1; bit-- > 0;) {
    result = mat_mul_mod(result, result);
    if (mpz_tstbit(n.get_mpz_t(), bit)) result = mat_mul_mod(result, a);
  }
  return result;
}

Natural gl_order(std::size_t d, const FactoredModulus& fm) {
  if (d == 0) throw DimensionMismatch("GL_d needs d >= 1");
  const unsigned long dd = static_cast<unsigned long>(d);
  Natural order = 1;
  for (std::size_t i = 0; i < fm.size(); ++i) {
    const Natural& p = fm.primes()[i];
    Natural lift;
    mpz_pow_ui(lift.get_mpz_t(), p.get_mpz_t(), (fm.exponents()[i] - 1) * dd * dd);
    order *= lift;
    Natural pd;
    mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), dd);
    Natural pj = 1;
    for (std::size_t j = 0; j < d; ++j) {
      order *= pd - pj;
      pj *= p;
    }
  }
  return order;
}

FactoredModulus sub_modulus_factors(const FactoredModulus& fm, const ParameterVector& tv) {
  tv.check_against(fm);
  std::vector<PrimePower> factors;
  for (std::size_t i = 0; i < fm.size(); ++i) factors.push_back({fm.primes()[i], tv.t()[i]});
  return FactoredModulus::from_factors(std::move(factors), /*trust_factors=*/true);
}

MatrixModM mat_fast_exp(const MatrixModM& a, const Natural& n, const FactoredModulus& fm,
                        const ParameterVector& tv) {
  tv.check_against(fm);
  if (a.modulus() != fm.value()) {
    throw DimensionMismatch("matrix modulus " + to_decimal(a.modulus()) +
                            " differs from the factored modulus " + to_decimal(fm.value()));
  }
  if (n < 0) throw DomainError("exponent must be non-negative");
  const Natural& m = fm.value();
  Natural det = a.determinant_mod();
  Natural g;
  mpz_gcd(g.get_mpz_t(), det.get_mpz_t(), m.get_mpz_t());
  if (g != 1) {
    throw NonInvertibleMatrix("det = " + to_decimal(det) + " shares a factor with " +
                              to_decimal(m));
  }

  const Natural group_order = gl_order(a.dim(), sub_modulus_factors(fm, tv));
  Natural quotient, remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), n.get_mpz_t(),
              group_order.get_mpz_t());

  // B = A^|GL| - I, every entry divisible by T.
  MatrixModM b = mat_pow_baseline(a, group_order);
  for (std::size_t i = 0; i < a.dim(); ++i) b.set(i, i, b(i, i) - 1);

  BinomialCoefficients coeffs(quotient, series_length(fm, tv), m, fm.primes(),
                              InverseMode::kRecursive);
  MatrixModM acc(a.dim(), m);
  MatrixModM power = MatrixModM::identity(a.dim(), m);
  for (std::uint64_t i = 0;; ++i) {
    acc = mat_add_mod(acc, mat_scale_mod(power, coeffs.current()));
    if (i + 1 >= coeffs.count()) break;
    power = mat_mul_mod(power, b);
    coeffs.advance();
  }
  return mat_mul_mod(acc, mat_pow_baseline(a, remainder));
}

}  // namespace fme
