#include "permtest/metrics.hpp"

#include <algorithm>

#include "permtest/errors.hpp"

namespace permtest {

std::size_t disagreement_count(const Permutation& sigma, const Permutation& tau) {
  if (sigma.n() != tau.n()) throw ValidationError("Hamming distance needs permutations of equal degree");
  std::size_t count = 0;
  for (std::uint32_t i = 0; i < sigma.n(); ++i) count += sigma.image_index(i) != tau.image_index(i);
  return count;
}

Rational hamming(const Permutation& sigma, const Permutation& tau) {
  if (sigma.n() != tau.n()) throw ValidationError("Hamming distance needs permutations of equal degree");
  if (sigma.n() == 0) return Rational(0);
  return make_rational(static_cast<std::int64_t>(disagreement_count(sigma, tau)), sigma.n());
}

Rational tuple_distance(const PermTuple& a, const PermTuple& b) {
  if (a.d() != b.d() || a.n() != b.n()) throw ValidationError("tuple distance needs tuples of equal shape");
  if (a.n() == 0) return Rational(0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.d(); ++i) total += disagreement_count(a[i], b[i]);
  return make_rational(static_cast<std::int64_t>(total), a.n());
}

Rational flexible_distance(const Permutation& sigma, const Permutation& tau) {
  const Permutation& small = sigma.n() <= tau.n() ? sigma : tau;
  const Permutation& large = sigma.n() <= tau.n() ? tau : sigma;
  if (large.n() == 0) return Rational(0);
  std::size_t count = large.n() - small.n();
  for (std::uint32_t i = 0; i < small.n(); ++i) count += small.image_index(i) != large.image_index(i);
  return make_rational(static_cast<std::int64_t>(count), large.n());
}

Rational flexible_tuple_distance(const PermTuple& a, const PermTuple& b) {
  if (a.d() != b.d()) throw ValidationError("flexible distance needs tuples of equal length");
  Rational total = 0;
  for (std::size_t i = 0; i < a.d(); ++i) total += flexible_distance(a[i], b[i]);
  return total;
}

}  // namespace permtest
