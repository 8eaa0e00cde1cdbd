#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "permtest/caps.hpp"
#include "permtest/word.hpp"

namespace permtest {

/// A point of [n] = {1, ..., n}.
using Point = std::uint32_t;

/// A bijection of [n], stored together with its inverse.
///
/// Points are 1-based at the interface. The `*_index` accessors take and
/// return 0-based positions for tight loops.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(std::uint32_t n);
  /// images[x-1] = sigma(x). Throws ValidationError unless this is a bijection of [n].
  static Permutation from_images(std::vector<Point> images);
  /// Disjoint-cycle notation, e.g. {{1,2,3}} on n points.
  static Permutation from_cycles(std::uint32_t n, const std::vector<std::vector<Point>>& cycles);

  std::uint32_t n() const noexcept { return static_cast<std::uint32_t>(image_.size()); }
  Point operator()(Point x) const { return image_[x - 1] + 1; }
  Point preimage(Point x) const { return inverse_[x - 1] + 1; }
  std::uint32_t image_index(std::uint32_t i) const noexcept { return image_[i]; }
  std::uint32_t preimage_index(std::uint32_t i) const noexcept { return inverse_[i]; }

  std::vector<Point> images() const;
  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::vector<Point> fixed_points() const;

  /// (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  std::string cycle_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.image_ == b.image_; }
  /// Lexicographic on the image sequence.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  std::vector<std::uint32_t> image_;
  std::vector<std::uint32_t> inverse_;
};

/// An ordered d-tuple of permutations on the same n points.
class PermTuple {
 public:
  PermTuple() = default;
  /// Throws ValidationError unless all entries share one n. `n` is used when the tuple is empty.
  explicit PermTuple(std::vector<Permutation> perms, std::uint32_t n = 0);

  std::uint32_t n() const noexcept { return n_; }
  std::size_t d() const noexcept { return perms_.size(); }
  const Permutation& operator[](std::size_t i) const { return perms_[i]; }
  /// 1-based generator access.
  const Permutation& generator(std::uint32_t g) const { return perms_[g - 1]; }
  const std::vector<Permutation>& perms() const noexcept { return perms_; }

  PermTuple inverse() const;

  friend bool operator==(const PermTuple&, const PermTuple&) = default;
  /// Lexicographic on the concatenated image sequences.
  friend std::strong_ordering operator<=>(const PermTuple& a, const PermTuple& b) {
    return a.perms_ <=> b.perms_;
  }

  std::string to_string() const;

 private:
  std::vector<Permutation> perms_;
  std::uint32_t n_ = 0;
};

/// w(t)(x): the rightmost letter acts first.
Point evaluate_point(const Word& w, const PermTuple& t, Point x);
/// The permutation w(t).
Permutation evaluate(const Word& w, const PermTuple& t);

/// n! with saturation at UINT64_MAX.
std::uint64_t factorial(std::uint32_t n);
/// (n!)^d with saturation.
std::uint64_t tuple_count(std::uint32_t n, std::size_t d);

/// Sym(n) in lexicographic order of image sequences. Throws InfeasibleError past caps.states.
std::vector<Permutation> all_permutations(std::uint32_t n, const Caps& caps = {});

/// Visits every d-tuple of Sym(n) in lexicographic order. The visitor returns false to stop.
template <class Visitor>
void for_each_tuple(std::uint32_t n, std::size_t d, const Caps& caps, Visitor&& visit);

/// Uniform random permutation from a 64-bit engine.
template <class Engine>
Permutation random_permutation(std::uint32_t n, Engine& engine);

template <class Engine>
PermTuple random_tuple(std::uint32_t n, std::size_t d, Engine& engine) {
  std::vector<Permutation> perms;
  perms.reserve(d);
  for (std::size_t i = 0; i < d; ++i) perms.push_back(random_permutation(n, engine));
  return PermTuple(std::move(perms), n);
}

}  // namespace permtest

#include "permtest/permutation_impl.hpp"
