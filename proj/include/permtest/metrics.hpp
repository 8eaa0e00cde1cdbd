#pragma once

#include <cstddef>

#include "permtest/permutation.hpp"
#include "permtest/rational.hpp"

namespace permtest {

/// |{x : sigma(x) != tau(x)}|.
std::size_t disagreement_count(const Permutation& sigma, const Permutation& tau);

/// Normalized Hamming distance on Sym(n).
Rational hamming(const Permutation& sigma, const Permutation& tau);

/// Sum of coordinatewise Hamming distances.
Rational tuple_distance(const PermTuple& a, const PermTuple& b);

/// Distance between permutations of possibly different sizes.
///
/// With n <= N the smaller permutation is compared on [n] and the N - n
/// extra points count as disagreements; the total is divided by N.
Rational flexible_distance(const Permutation& sigma, const Permutation& tau);

/// Coordinatewise sum of flexible distances.
Rational flexible_tuple_distance(const PermTuple& a, const PermTuple& b);

}  // namespace permtest
