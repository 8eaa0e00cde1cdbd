#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "permtest/permutation.hpp"
#include "permtest/rational.hpp"
#include "permtest/subset.hpp"
#include "permtest/word.hpp"

namespace permtest {

/// stab_P(t, x) = {w in P : w(t) fixes x}, as a subset of P's positions.
Subset stab_fragment(const PermTuple& t, const WordSet& words, Point x);

/// A finitely supported probability distribution on subsets of a word list.
///
/// Masses are exact. Zero-mass subsets are never stored.
class LocalDistribution {
 public:
  LocalDistribution() = default;
  explicit LocalDistribution(std::size_t universe) : universe_(universe) {}

  std::size_t universe() const noexcept { return universe_; }
  void add(const Subset& s, const Rational& mass);
  Rational mass(const Subset& s) const;
  Rational total_mass() const;
  const std::map<Subset, Rational>& support() const noexcept { return masses_; }

  /// Push-forward along the projection onto the positions in `keep`.
  LocalDistribution marginal(const std::vector<std::size_t>& keep) const;

  friend bool operator==(const LocalDistribution& a, const LocalDistribution& b) {
    return a.universe_ == b.universe_ && a.masses_ == b.masses_;
  }
  friend bool operator<(const LocalDistribution& a, const LocalDistribution& b) {
    if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
    return a.masses_ < b.masses_;
  }

 private:
  std::size_t universe_ = 0;
  std::map<Subset, Rational> masses_;
};

/// N_{t,P}: the law of stab_P(t, x) for uniform x in [n].
LocalDistribution local_distribution(const PermTuple& t, const WordSet& words);

/// The distribution of fragments over a multiset of points.
/// `counts[x-1]` is the multiplicity of x; the masses are counts divided by their sum.
LocalDistribution empirical_distribution(const std::vector<Subset>& fragments,
                                         const std::vector<std::uint64_t>& counts);

/// Total variation distance: half the L1 distance.
Rational tv_distance(const LocalDistribution& a, const LocalDistribution& b);

}  // namespace permtest
