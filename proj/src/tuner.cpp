#include "fme/tuner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <ratio>
#include <string>

#include "fme/errors.hpp"
#include "fme/fit.hpp"
#include "fme/modexp.hpp"

namespace fme {

void CostWeights::validate() const {
  if (!(alpha > 0) || !(beta > 0)) {
    throw ParameterOutOfRange("cost weights need alpha > 0 and beta > 0");
  }
}

CostWeights parse_weights(std::string_view text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string item(text.substr(pos, comma == text.npos ? text.npos : comma - pos));
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || !std::isfinite(v)) {
      throw ParseError("invalid weight '" + item + "'");
    }
    values.push_back(v);
    if (comma == text.npos) break;
    pos = comma + 1;
  }
  if (values.size() != 3) throw ParseError("weights take three values: alpha,beta,overhead");
  CostWeights w{values[0], values[1], values[2]};
  w.validate();
  return w;
}

double cost_model(const FactoredModulus& fm, const ParameterVector& tv, const CostWeights& w) {
  double bits = 0;
  for (std::size_t i = 0; i < fm.size(); ++i) bits += tv.t()[i] * log2_of(fm.primes()[i]);
  return w.alpha * static_cast<double>(series_length(fm, tv)) + w.beta * bits + w.overhead;
}

TuneResult tune_parameters(const FactoredModulus& fm, const CostWeights& w) {
  w.validate();
  std::optional<TuneResult> best;
  for (std::uint64_t target = 1; target <= fm.max_exponent(); ++target) {
    std::vector<std::uint32_t> t(fm.size());
    for (std::size_t i = 0; i < fm.size(); ++i) {
      const std::uint64_t e = fm.exponents()[i];
      t[i] = static_cast<std::uint32_t>(std::clamp<std::uint64_t>((e + target - 1) / target, 1, e));
    }
    ParameterVector tv(fm, std::move(t));
    const double cost = cost_model(fm, tv, w);
    if (!best || cost < best->cost) best = TuneResult{std::move(tv), target, cost};
  }
  return std::move(*best);
}

ClockCostProbe::ClockCostProbe(const FactoredModulus& fm, int repeats, std::uint64_t seed)
    : modulus_(fm.value()), repeats_(std::max(1, repeats)), seed_(seed) {}

double ClockCostProbe::measure_ns(std::uint64_t series_terms, std::uint64_t exponent_bits) {
  std::mt19937_64 rng(seed_ ^ (series_terms * 0x9e3779b97f4a7c15ULL) ^ exponent_bits);
  const Natural lo = modulus_ / 2;
  const Natural hi = modulus_ - 1;
  Natural choose = uniform_natural(rng, lo, hi);
  Natural factor = uniform_natural(rng, lo, hi);
  Natural power = uniform_natural(rng, lo, hi);
  const Natural c = uniform_natural(rng, lo, hi);
  Natural exponent = 0;
  if (exponent_bits > 0) {
    Natural top;
    mpz_ui_pow_ui(top.get_mpz_t(), 2, exponent_bits - 1);
    exponent = uniform_natural(rng, top, 2 * top - 1);
  }

  auto run_once = [&] {
    Natural acc = 0;
    for (std::uint64_t i = 0; i < series_terms; ++i) {
      Natural term = choose * power;
      acc += term % modulus_;
      power = power * c % modulus_;
      choose = choose * factor % modulus_;
      choose = choose * c % modulus_;
    }
    Natural r = mod_exp_baseline(c, exponent, modulus_);
    return acc + r;
  };

  using Clock = std::chrono::steady_clock;
  std::vector<double> samples;
  volatile std::size_t sink = 0;
  sink = sink + bit_length(run_once());  // warmup
  for (int rep = 0; rep < repeats_; ++rep) {
    const auto start = Clock::now();
    sink = sink + bit_length(run_once());
    const auto stop = Clock::now();
    samples.push_back(std::chrono::duration<double, std::nano>(stop - start).count());
  }
  std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
  return samples[samples.size() / 2];
}

CostWeights calibrate_weights(CostProbe& probe) {
  static constexpr std::uint64_t kTerms[] = {16, 64, 256};
  static constexpr std::uint64_t kBits[] = {64, 256, 1024};
  std::vector<double> design, times;
  for (std::uint64_t terms : kTerms) {
    for (std::uint64_t bits : kBits) {
      design.insert(design.end(), {static_cast<double>(terms), static_cast<double>(bits), 1.0});
      times.push_back(probe.measure_ns(terms, bits));
    }
  }
  if (std::all_of(times.begin(), times.end(), [](double t) { return t <= 0; })) {
    throw ClockUnavailable("timer reported zero duration for every calibration workload");
  }
  std::vector<double> coef = least_squares(design, 3, times);
  if (!(coef[0] > 0) || !(coef[1] > 0)) {
    throw ClockUnavailable("calibration could not resolve positive per-term and per-bit costs");
  }
  return {coef[0], coef[1], coef[2]};
}

CostWeights calibrate_weights(const FactoredModulus& sample) {
  using Period = std::chrono::steady_clock::period;
  if (std::ratio_greater<Period, std::micro>::value) {
    throw ClockUnavailable("steady_clock resolution is coarser than 1us");
  }
  ClockCostProbe probe(sample);
  return calibrate_weights(probe);
}

}  // namespace fme
