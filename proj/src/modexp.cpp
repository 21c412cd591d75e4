#include "fme/modexp.hpp"

#include <algorithm>

#include "fme/errors.hpp"

namespace fme {

namespace {

void mul_mod_into(Natural& acc, const Natural& factor, const Natural& m, StepCount* steps) {
  acc *= factor;
  mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  if (steps) ++steps->multiplications;
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

Natural run_series(const Natural& a, const Natural& n, const FactoredModulus& fm,
                   const ParameterVector& tv, InverseMode mode,
                   std::optional<std::uint64_t> terms_override, StepCount* steps) {
  tv.check_against(fm);
  if (n < 0) throw DomainError("exponent must be non-negative");
  const Natural& m = fm.value();
  const Natural base = mod_floor(a, m);
  Natural g;
  mpz_gcd(g.get_mpz_t(), base.get_mpz_t(), m.get_mpz_t());
  if (g != 1) {
    throw NotCoprime("gcd(" + to_decimal(a) + ", " + to_decimal(m) + ") = " + to_decimal(g));
  }

  const Natural& phi = tv.phi();
  Natural quotient, remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), n.get_mpz_t(), phi.get_mpz_t());

  // c = a^phi - 1 is divisible by T; only its residue mod m is needed.
  Natural c = mod_exp_baseline(base, phi, m, steps) - 1;
  if (c < 0) c += m;

  const std::uint64_t terms = terms_override.value_or(series_length(fm, tv));
  Natural acc = 0;
  if (terms > 0) {
    BinomialCoefficients coeffs(quotient, terms, m, fm.primes(), mode, steps);
    Natural power = 1;
    for (std::uint64_t i = 0;; ++i) {
      Natural term = coeffs.current();
      mul_mod_into(term, power, m, steps);
      acc += term;
      if (acc >= m) acc -= m;
      if (i + 1 >= coeffs.count()) break;
      mul_mod_into(power, c, m, steps);
      coeffs.advance();
    }
  }

  Natural result = mod_exp_baseline(base, remainder, m, steps);
  mul_mod_into(result, acc, m, steps);
  return result;
}

}  // namespace

Natural mod_exp_baseline(const Natural& a, const Natural& n, const Natural& m,
                         StepCount* steps) {
  if (m < 1) throw DomainError("modulus must be positive");
  if (n < 0) throw DomainError("exponent must be non-negative");
  if (n == 0) return Natural(1) % m;
  const Natural base = mod_floor(a, m);
  Natural result = base;
  for (std::size_t bit = bit_length(n) - 1; bit-- > 0;) {
    mul_mod_into(result, result, m, steps);
    if (mpz_tstbit(n.get_mpz_t(), bit)) mul_mod_into(result, base, m, steps);
  }
  return result;
}

std::uint64_t series_length(const FactoredModulus& fm, const ParameterVector& tv) {
  tv.check_against(fm);
  std::uint64_t l = 1;
  for (std::size_t i = 0; i < fm.size(); ++i) {
    l = std::max(l, ceil_div(fm.exponents()[i], tv.t()[i]));
  }
  return l;
}

BinomialCoefficients::BinomialCoefficients(const Natural& upper, std::uint64_t terms,
                                           const Natural& m, std::span<const Natural> primes,
                                           InverseMode mode, StepCount* steps)
    : m_(m), primes_(primes.begin(), primes.end()), mode_(mode), steps_(steps) {
  if (terms == 0) throw DomainError("binomial series needs at least one term");
  if (upper < 0) throw DomainError("binomial upper index must be non-negative");
  count_ = terms;
  if (upper + 1 < from_u64(terms)) count_ = to_u64(upper) + 1;

  working_modulus_ = m;
  for (std::uint64_t j = 2; j < count_; ++j) {
    const std::uint64_t v = v_part(j, primes_);
    if (v != 1) working_modulus_ *= from_u64(v);
  }
  upper_mod_w_ = mod_floor(upper, working_modulus_);
  choose_ = Natural(1) % working_modulus_;
  if (mode_ == InverseMode::kRecursive && count_ > 1) {
    table_.emplace(generate_inverse_pairs(count_ - 1, working_modulus_, primes_, steps_));
  }
}

Natural BinomialCoefficients::current() const { return mod_floor(choose_, m_); }

void BinomialCoefficients::advance() {
  if (index_ + 1 >= count_) throw IndexError("binomial coefficient stream exhausted");
  const Natural& w = working_modulus_;
  const std::uint64_t next = index_ + 1;

  // choose * (M - i) is C(M, i+1) * (i+1) modulo W / prod_{j <= i} v_j.
  Natural factor = upper_mod_w_ - from_u64(index_);
  if (factor < 0) factor += w;
  mul_mod_into(choose_, factor, w, steps_);

  InversePair pair = mode_ == InverseMode::kRecursive
                         ? (*table_)[next]
                         : direct_inverse_pair(next, w, primes_, steps_);
  if (pair.v != 1) {
    mpz_fdiv_q_ui(choose_.get_mpz_t(), choose_.get_mpz_t(), pair.v);
    if (steps_) ++steps_->divisions;
  }
  mul_mod_into(choose_, pair.u, w, steps_);
  index_ = next;
}

Natural fast_mod_exp(const Natural& a, const Natural& n, const FactoredModulus& fm,
                     const ParameterVector& tv, InverseMode mode) {
  return run_series(a, n, fm, tv, mode, std::nullopt, nullptr);
}

CountedResidue fast_mod_exp_counted(const Natural& a, const Natural& n,
                                    const FactoredModulus& fm, const ParameterVector& tv,
                                    InverseMode mode) {
  CountedResidue out;
  out.residue = run_series(a, n, fm, tv, mode, std::nullopt, &out.steps);
  return out;
}

Natural fast_mod_exp_truncated(const Natural& a, const Natural& n, const FactoredModulus& fm,
                               const ParameterVector& tv, InverseMode mode,
                               std::uint64_t terms) {
  return run_series(a, n, fm, tv, mode, terms, nullptr);
}

}  // namespace fme
