#include "fme/errors.hpp"
#include "fme/matrix.hpp"

namespace fme {

namespace {

void check_spec(const RecurrenceSpec& spec) {
  if (spec.coeffs.empty()) throw ParseError("recurrence needs at least one coefficient");
  if (spec.init.size() != spec.coeffs.size()) {
    throw DimensionMismatch("recurrence of order " + std::to_string(spec.coeffs.size()) +
                            " needs that many initial values, got " +
                            std::to_string(spec.init.size()));
  }
}

}  // namespace

MatrixModM companion_matrix(const RecurrenceSpec& spec, const Natural& m) {
  check_spec(spec);
  const std::size_t d = spec.coeffs.size();
  Natural c0 = mod_floor(spec.coeffs.back(), m);
  Natural g;
  mpz_gcd(g.get_mpz_t(), c0.get_mpz_t(), m.get_mpz_t());
  if (g != 1) throw NotCoprime("c_0 = " + to_decimal(c0) + " is not a unit modulo " + to_decimal(m));

  MatrixModM out(d, m);
  for (std::size_t c = 0; c < d; ++c) out.set(0, c, spec.coeffs[c]);
  for (std::size_t r = 1; r < d; ++r) out.set(r, r - 1, 1);
  return out;
}

Natural recurrence_term(const RecurrenceSpec& spec, const Natural& index,
                        const FactoredModulus& fm, const ParameterVector& tv) {
  check_spec(spec);
  const Natural& m = fm.value();
  const std::size_t d = spec.coeffs.size();
  const MatrixModM companion = companion_matrix(spec, m);
  if (index < 0) throw DomainError("recurrence index must be non-negative");
  if (index < from_u64(d)) return mod_floor(spec.init[to_u64(index)], m);

  // State (u_{n+d-1}, ..., u_n); the companion matrix advances n by one.
  const MatrixModM step = mat_fast_exp(companion, index, fm, tv);
  mpz_class acc = 0;
  for (std::size_t c = 0; c < d; ++c) acc += step(d - 1, c) * spec.init[d - 1 - c];
  return mod_floor(acc, m);
}

}  // namespace fme
