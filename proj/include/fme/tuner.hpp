#pragma once

#include <cstdint>
#include <string_view>

#include "fme/numtheory.hpp"

namespace fme {

// Cost of one series term, of one exponent bit in a repeated-squaring call,
// and a fixed per-call overhead. alpha, beta > 0.
struct CostWeights {
  double alpha = 1.0;
  double beta = 1.5;
  double overhead = 0.0;

  void validate() const;
};

// "a,b,c"
CostWeights parse_weights(std::string_view text);

// alpha * series_length + beta * sum_i t_i log2 p_i + overhead.
double cost_model(const FactoredModulus& fm, const ParameterVector& tv, const CostWeights& w);

struct TuneResult {
  ParameterVector params;
  std::uint64_t target_length;  // the l* that produced params
  double cost;
};

// Sweeps l* = 1..max e_i with t_i = clamp(ceil(e_i / l*), 1, e_i) and keeps
// the cheapest; ties go to the smaller l*.
TuneResult tune_parameters(const FactoredModulus& fm, const CostWeights& w = {});

// Times a workload of `series_terms` binomial-series steps plus a
// repeated-squaring call over an `exponent_bits`-bit exponent.
class CostProbe {
 public:
  virtual ~CostProbe() = default;
  virtual double measure_ns(std::uint64_t series_terms, std::uint64_t exponent_bits) = 0;
};

// Runs the real arithmetic modulo fm.value() under std::chrono::steady_clock,
// reporting the median of `repeats` runs after one warmup.
class ClockCostProbe : public CostProbe {
 public:
  explicit ClockCostProbe(const FactoredModulus& fm, int repeats = 5, std::uint64_t seed = 1);
  double measure_ns(std::uint64_t series_terms, std::uint64_t exponent_bits) override;

 private:
  Natural modulus_;
  int repeats_;
  std::uint64_t seed_;
};

// Least-squares fit of time = alpha*terms + beta*bits + overhead over a fixed
// design grid. Throws ClockUnavailable if the probe cannot resolve the
// workloads (all-zero or non-positive slopes).
CostWeights calibrate_weights(CostProbe& probe);
CostWeights calibrate_weights(const FactoredModulus& sample);

}  // namespace fme
