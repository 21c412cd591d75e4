#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "fme/bigint.hpp"
#include "fme/inverse_pairs.hpp"
#include "fme/numtheory.hpp"
#include "fme/steps.hpp"

namespace fme {

// a^n mod m by left-to-right square-and-multiply. n = 0 gives 1 mod m.
// Every modular multiplication (squarings included) is tallied in steps.
Natural mod_exp_baseline(const Natural& a, const Natural& n, const Natural& m,
                         StepCount* steps = nullptr);

// Number of nonzero terms of (1 + c)^M mod m when T | c:
// l = max_i ceil(e_i / t_i), the least l with T^l == 0 (mod m).
std::uint64_t series_length(const FactoredModulus& fm, const ParameterVector& tv);

// Streams C(M, 0), C(M, 1), ... reduced mod m using
//   C(M, i+1) = C(M, i) * (M - i) / (i + 1)
// where the division by i + 1 is an exact integer division by v_{i+1}
// followed by multiplication with u_{i+1}.
//
// The running value lives modulo W = m * prod_{j < count} v_j rather than m,
// so that each division by v_{i+1} is exact even when v_{i+1} carries more
// of a prime than m does. Inverse pairs are taken modulo W.
class BinomialCoefficients {
 public:
  BinomialCoefficients(const Natural& upper, std::uint64_t terms, const Natural& m,
                       std::span<const Natural> primes, InverseMode mode,
                       StepCount* steps = nullptr);

  // min(terms, upper + 1)
  std::uint64_t count() const { return count_; }
  std::uint64_t index() const { return index_; }
  const Natural& working_modulus() const { return working_modulus_; }

  // C(upper, index()) mod m.
  Natural current() const;

  // Requires index() + 1 < count().
  void advance();

 private:
  Natural m_;
  Natural working_modulus_;
  Natural upper_mod_w_;
  std::vector<Natural> primes_;
  InverseMode mode_;
  StepCount* steps_;
  std::uint64_t count_ = 0;
  std::uint64_t index_ = 0;
  Natural choose_ = 1;
  std::optional<InversePairTable> table_;
};

struct CountedResidue {
  Natural residue;
  StepCount steps;
};

// a^n mod m via n = M*phi(T) + r and (a^phi(T))^M = (1 + c)^M with T | c.
// Throws NotCoprime if gcd(a, m) != 1, ParameterOutOfRange for a bad tv.
Natural fast_mod_exp(const Natural& a, const Natural& n, const FactoredModulus& fm,
                     const ParameterVector& tv, InverseMode mode = InverseMode::kRecursive);

CountedResidue fast_mod_exp_counted(const Natural& a, const Natural& n,
                                    const FactoredModulus& fm, const ParameterVector& tv,
                                    InverseMode mode = InverseMode::kRecursive);

// Same procedure with the series cut at `terms` instead of series_length.
// Only useful for checking that series_length is tight.
Natural fast_mod_exp_truncated(const Natural& a, const Natural& n, const FactoredModulus& fm,
                               const ParameterVector& tv, InverseMode mode,
                               std::uint64_t terms);

}  // namespace fme
