#pragma once

#include <cstdint>
#include <functional>

namespace permtest {

/// A success count with an exact binomial (Clopper-Pearson) confidence interval.
struct RateEstimate {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double rate = 0.0;
  double low = 0.0;
  double high = 1.0;
  double confidence = 0.99;
  bool contains(double p) const noexcept { return low <= p && p <= high; }
};

RateEstimate clopper_pearson(std::uint64_t successes, std::uint64_t trials, double confidence = 0.99);

/// Runs trial(derive_seed(master_seed, i)) for i < trials and counts true results.
RateEstimate empirical_rate(const std::function<bool(std::uint64_t seed)>& trial, std::uint64_t trials,
                            std::uint64_t master_seed, double confidence = 0.99);

}  // namespace permtest
