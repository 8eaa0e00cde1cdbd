#include "permtest/statistics.hpp"

#include <boost/math/special_functions/beta.hpp>

#include "permtest/errors.hpp"
#include "permtest/rng.hpp"

namespace permtest {

RateEstimate clopper_pearson(std::uint64_t successes, std::uint64_t trials, double confidence) {
  if (trials == 0) throw ValidationError("a rate needs at least one trial");
  if (successes > trials) throw ValidationError("more successes than trials");
  if (!(confidence > 0.0 && confidence < 1.0)) throw ValidationError("confidence must lie in (0, 1)");
  RateEstimate e;
  e.successes = successes;
  e.trials = trials;
  e.confidence = confidence;
  e.rate = static_cast<double>(successes) / static_cast<double>(trials);
  const double alpha = 1.0 - confidence;
  const auto x = static_cast<double>(successes);
  const auto n = static_cast<double>(trials);
  e.low = successes == 0 ? 0.0 : boost::math::ibeta_inv(x, n - x + 1.0, alpha / 2.0);
  e.high = successes == trials ? 1.0 : boost::math::ibeta_inv(x + 1.0, n - x, 1.0 - alpha / 2.0);
  return e;
}

RateEstimate empirical_rate(const std::function<bool(std::uint64_t seed)>& trial, std::uint64_t trials,
                            std::uint64_t master_seed, double confidence) {
  std::uint64_t successes = 0;
  for (std::uint64_t i = 0; i < trials; ++i) successes += trial(derive_seed(master_seed, i)) ? 1 : 0;
  return clopper_pearson(successes, trials, confidence);
}

}  // namespace permtest
