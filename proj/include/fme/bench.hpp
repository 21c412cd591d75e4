#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fme/bench_timing.hpp"
#include "fme/bigint.hpp"
#include "fme/numtheory.hpp"

namespace fme {

// One timing / step-count observation. Times are medians over the repeats.
struct BenchPoint {
  Natural p;
  std::uint32_t e = 0;
  std::uint32_t t = 0;
  double log10_m = 0;
  std::uint64_t steps_fast = 0;
  std::uint64_t steps_baseline = 0;
  std::uint64_t time_fast_ns = 0;
  std::uint64_t time_baseline_ns = 0;
  double ratio = 0;  // time_baseline_ns / time_fast_ns

  double step_ratio() const {
    return static_cast<double>(steps_baseline) / static_cast<double>(steps_fast);
  }

  friend bool operator==(const BenchPoint&, const BenchPoint&) = default;
};

struct SweepConfig {
  std::uint64_t seed = 1;
  std::uint64_t iterations = 20;
  int repeats = 5;  // >= 3
  int warmup = 1;   // >= 1
  bool measure_time = true;
  std::size_t max_modulus_bits = 20'000;
  std::uint32_t max_family_n = 20;
};

// Prime-power sweep: for each iteration pick a prime p in [prime_lo, prime_hi],
// k uniform in [ln p - sqrt(ln p), ln p + sqrt(ln p)] rounded (min 1), a and n
// uniform in [m/2, m] with p not dividing a, t = 1.
std::vector<BenchPoint> sweep_primes(const Natural& prime_lo, const Natural& prime_hi,
                                     const SweepConfig& config);

// One point per scalar t in [t_lo, t_hi] for the fixed instance a^n mod p^e.
// Throws ResultMismatch if any residue differs from the baseline.
std::vector<BenchPoint> sweep_t(const Natural& p, std::uint32_t e, const Natural& a,
                                const Natural& n, std::uint32_t t_lo, std::uint32_t t_hi,
                                const SweepConfig& config);

// m = P(n)^n for n in [n_lo, n_hi], P(n) the first prime above 10^n, t = 1.
std::vector<BenchPoint> sweep_sqrt_family(std::uint32_t n_lo, std::uint32_t n_hi,
                                          const SweepConfig& config);

// First prime greater than 10^n.
Natural first_prime_above_power_of_ten(std::uint32_t n);

inline constexpr std::string_view kCsvHeader =
    "p,e,t,log10_m,steps_fast,steps_baseline,time_fast_ns,time_baseline_ns,ratio";

std::string format_csv(const std::vector<BenchPoint>& points);
std::vector<BenchPoint> parse_csv(std::string_view text);

// Throws IoError.
void write_csv(const std::vector<BenchPoint>& points, const std::filesystem::path& path);

}  // namespace fme
