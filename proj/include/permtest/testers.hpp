#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "permtest/caps.hpp"
#include "permtest/equations.hpp"
#include "permtest/local_stats.hpp"
#include "permtest/oracle.hpp"
#include "permtest/rational.hpp"

namespace permtest {

/// Outcome of one tester run.
struct Verdict {
  bool accepted = false;
  std::uint64_t queries_used = 0;
  std::uint64_t inverse_queries = 0;
  PartialSGraph transcript;
  std::uint64_t seed = 0;
  std::string rng;
};

/// Sample-and-substitute: k rounds of (uniform equation, uniform point), comparing
/// both sides through oracle walks. Every round is carried out, so the query count
/// is the total length of the sampled equations. An empty system accepts at once.
Verdict sas(const PermTuple& t, const EquationSystem& system, std::uint64_t k, std::uint64_t seed);

/// Exact rejection probability of sas with k rounds: 1 - (1 - L_E(t)/r)^k.
Rational sas_reject_probability_exact(const PermTuple& t, const EquationSystem& system, std::uint64_t k);

/// The solution-side data the local statistics matcher compares against.
struct LsmContext {
  EquationSystem system;
  std::uint32_t n = 0;
  WordSet words;
  /// Distinct N_{sigma,P} over sigma in SOL_E(n), sorted.
  std::vector<LocalDistribution> solution_distributions;
  std::size_t solution_count = 0;
};

/// Builds the context by enumerating SOL_E(n).
std::shared_ptr<const LsmContext> make_lsm_context(const EquationSystem& system, std::uint32_t n,
                                                   const WordSet& words, const Caps& caps = {});

/// Thread-safe memo of contexts keyed by (system, n, word list).
class LsmContextCache {
 public:
  std::shared_ptr<const LsmContext> get(const EquationSystem& system, std::uint32_t n, const WordSet& words,
                                        const Caps& caps = {});
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::tuple<std::string, std::uint32_t, std::string>, std::shared_ptr<const LsmContext>> contexts_;
};

/// The LSM decision rule: accept iff some solution distribution is within delta in total variation.
bool lsm_decide(const LocalDistribution& empirical, const LsmContext& context, const Rational& delta);

/// Local statistics matcher, one sampled point at a time: k points, sum over P of |w| queries each.
Verdict lsm(const PermTuple& t, const LsmContext& context, std::uint64_t k, const Rational& delta,
            std::uint64_t seed);

/// Same verdict law as lsm, for very large k.
///
/// Point multiplicities are drawn as Multinomial(k; uniform on [n]) through
/// sequential binomials, and each point with positive multiplicity is walked
/// once. queries_used counts the walks actually made.
Verdict lsm_aggregated(const PermTuple& t, const LsmContext& context, std::uint64_t k, const Rational& delta,
                       std::uint64_t seed);

/// k = ceil(100 * 2^|P| / delta^2). Throws InfeasibleError if k does not fit in 64 bits.
std::uint64_t lsm_params(std::size_t word_count, const Rational& delta);

/// Exhaustive statistical distinguishability of SOL_E(n) from SOL_E^{>=eps}(n).
struct Distinguishability {
  /// Minimum TV distance between a solution view and a far view; absent when no tuple is eps-far.
  std::optional<Rational> delta;
  std::size_t solutions = 0;
  std::size_t far_tuples = 0;
  std::size_t distinct_solution_views = 0;
  std::size_t distinct_far_views = 0;
};

/// Tuples whose distance to SOL_E(n) is at least eps, in lexicographic order.
std::vector<PermTuple> far_tuples(const EquationSystem& system, std::uint32_t n, const Rational& eps,
                                  const Caps& caps = {});

Distinguishability distinguishability(const EquationSystem& system, std::uint32_t n, const WordSet& words,
                                      const Rational& eps, const Caps& caps = {});

}  // namespace permtest
