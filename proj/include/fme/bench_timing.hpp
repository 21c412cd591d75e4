#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <vector>

namespace fme {

// Median wall time of fn() over `repeats` runs after `warmup` untimed runs,
// in nanoseconds (at least 1).
template <class Fn>
std::uint64_t median_time_ns(Fn&& fn, int repeats, int warmup) {
  using Clock = std::chrono::steady_clock;
  for (int i = 0; i < warmup; ++i) fn();
  std::vector<std::uint64_t> samples;
  samples.reserve(static_cast<std::size_t>(repeats));
  for (int i = 0; i < repeats; ++i) {
    const auto start = Clock::now();
    fn();
    const auto stop = Clock::now();
    samples.push_back(static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
  }
  std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
  return std::max<std::uint64_t>(1, samples[samples.size() / 2]);
}

}  // namespace fme
