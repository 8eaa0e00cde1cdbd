#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "permtest/caps.hpp"
#include "permtest/equations.hpp"
#include "permtest/permutation.hpp"
#include "permtest/rational.hpp"

namespace permtest {

/// Throws ValidationError when the tuple size differs from the alphabet size.
void check_shape(const EquationSystem& system, const PermTuple& t);

/// Every equation holds exactly in Sym(n).
bool is_solution(const PermTuple& t, const EquationSystem& system);

/// Number of (equation, point) pairs where the two sides disagree.
std::uint64_t defect_count(const PermTuple& t, const EquationSystem& system);

/// L_E(t) = sum over equations of d_ham(lhs(t), rhs(t)).
Rational local_defect(const PermTuple& t, const EquationSystem& system);

/// Visits SOL_E(n) in lexicographic order; the visitor returns false to stop.
///
/// Pruning checks each equation as soon as its generators are assigned.
/// Throws InfeasibleError when (n!)^d exceeds caps.states.
void for_each_solution(const EquationSystem& system, std::uint32_t n, const Caps& caps,
                       const std::function<bool(const PermTuple&)>& visit);

/// SOL_E(n) in lexicographic order.
std::vector<PermTuple> enumerate_solutions(const EquationSystem& system, std::uint32_t n, const Caps& caps = {});

/// A closest solution together with its distance.
struct NearestSolution {
  Rational distance;
  PermTuple witness;
};

/// min over SOL_E(n) of the tuple distance; ties go to the earliest witness in enumeration order.
/// Empty when SOL_E(n) is empty.
std::optional<NearestSolution> nearest_solution(const PermTuple& t, const EquationSystem& system,
                                                const Caps& caps = {});
/// Same search over an already enumerated solution set.
std::optional<NearestSolution> nearest_in(const PermTuple& t, const std::vector<PermTuple>& solutions);

/// Closest solution of any size m in [1, max_m] under the flexible metric.
struct FlexibleNearest {
  Rational distance;
  PermTuple witness;
  std::uint32_t m = 0;
  /// Sizes actually enumerated; sizes skipped by the lower bound are not listed.
  std::vector<std::uint32_t> searched_sizes;
};

/// Searches m = n, n-1, n+1, n-2, ... up to max_m. Sizes whose lower bound
/// d*|m-n|/max(m,n) cannot beat the incumbent are skipped. Ties keep the
/// earlier size in that order, then the earlier witness.
std::optional<FlexibleNearest> flexible_nearest_solution(const PermTuple& t, const EquationSystem& system,
                                                         std::uint32_t max_m, const Caps& caps = {});

}  // namespace permtest
