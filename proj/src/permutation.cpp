#include "permtest/permutation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "permtest/errors.hpp"

namespace permtest {

Permutation Permutation::identity(std::uint32_t n) {
  Permutation p;
  p.image_.resize(n);
  std::iota(p.image_.begin(), p.image_.end(), 0U);
  p.inverse_ = p.image_;
  return p;
}

Permutation Permutation::from_images(std::vector<Point> images) {
  const auto n = static_cast<std::uint32_t>(images.size());
  Permutation p;
  p.image_.resize(n);
  p.inverse_.assign(n, std::numeric_limits<std::uint32_t>::max());
  for (std::uint32_t i = 0; i < n; ++i) {
    Point y = images[i];
    if (y < 1 || y > n) {
      throw ValidationError("image " + std::to_string(y) + " of point " + std::to_string(i + 1) +
                            " is outside [1, " + std::to_string(n) + "]");
    }
    if (p.inverse_[y - 1] != std::numeric_limits<std::uint32_t>::max()) {
      throw ValidationError("image " + std::to_string(y) + " repeats; not a permutation");
    }
    p.image_[i] = y - 1;
    p.inverse_[y - 1] = i;
  }
  return p;
}

Permutation Permutation::from_cycles(std::uint32_t n, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{1});
  std::vector<bool> used(n + 1, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x < 1 || x > n) throw ValidationError("cycle point " + std::to_string(x) + " outside [1, n]");
      if (used[x]) throw ValidationError("cycles are not disjoint at point " + std::to_string(x));
      used[x] = true;
      images[x - 1] = cycle[(i + 1) % cycle.size()];
    }
  }
  return from_images(std::move(images));
}

std::vector<Point> Permutation::images() const {
  std::vector<Point> out(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out[i] = image_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.image_ = inverse_;
  p.inverse_ = image_;
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::uint32_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

std::vector<Point> Permutation::fixed_points() const {
  std::vector<Point> out;
  for (std::uint32_t i = 0; i < image_.size(); ++i) {
    if (image_[i] == i) out.push_back(i + 1);
  }
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw ValidationError("composing permutations of different degrees");
  Permutation p;
  p.image_.resize(a.n());
  p.inverse_.resize(a.n());
  for (std::uint32_t i = 0; i < a.n(); ++i) {
    p.image_[i] = a.image_[b.image_[i]];
    p.inverse_[p.image_[i]] = i;
  }
  return p;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(image_.size(), false);
  for (std::uint32_t i = 0; i < image_.size(); ++i) {
    if (seen[i] || image_[i] == i) continue;
    out += "(";
    std::uint32_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = image_[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

PermTuple::PermTuple(std::vector<Permutation> perms, std::uint32_t n) : perms_(std::move(perms)), n_(n) {
  if (!perms_.empty()) {
    n_ = perms_.front().n();
    for (const Permutation& p : perms_) {
      if (p.n() != n_) throw ValidationError("tuple entries act on different numbers of points");
    }
  }
}

PermTuple PermTuple::inverse() const {
  std::vector<Permutation> out;
  out.reserve(perms_.size());
  for (const Permutation& p : perms_) out.push_back(p.inverse());
  return PermTuple(std::move(out), n_);
}

std::string PermTuple::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < perms_.size(); ++i) {
    if (i != 0) out += ", ";
    out += perms_[i].cycle_string();
  }
  return out + ")";
}

namespace {

void check_word_fits(const Word& w, const PermTuple& t) {
  if (w.max_generator() > t.d()) {
    throw ValidationError("word uses generator " + std::to_string(w.max_generator()) + " but the tuple has only " +
                          std::to_string(t.d()) + " entries");
  }
}

}  // namespace

Point evaluate_point(const Word& w, const PermTuple& t, Point x) {
  check_word_fits(w, t);
  if (x < 1 || x > t.n()) throw ValidationError("point " + std::to_string(x) + " outside [1, n]");
  std::uint32_t i = x - 1;
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const Permutation& p = t.generator(it->generator);
    i = it->positive() ? p.image_index(i) : p.preimage_index(i);
  }
  return i + 1;
}

Permutation evaluate(const Word& w, const PermTuple& t) {
  check_word_fits(w, t);
  std::vector<Point> images(t.n());
  for (Point x = 1; x <= t.n(); ++x) images[x - 1] = evaluate_point(w, t, x);
  return Permutation::from_images(std::move(images));
}

std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (f > std::numeric_limits<std::uint64_t>::max() / i) return std::numeric_limits<std::uint64_t>::max();
    f *= i;
  }
  return f;
}

std::uint64_t tuple_count(std::uint32_t n, std::size_t d) {
  std::uint64_t f = factorial(n);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (f != 0 && total > std::numeric_limits<std::uint64_t>::max() / f) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= f;
  }
  return total;
}

std::vector<Permutation> all_permutations(std::uint32_t n, const Caps& caps) {
  std::uint64_t total = factorial(n);
  if (total > caps.states) {
    throw InfeasibleError("enumerating " + std::to_string(n) + "! permutations exceeds the state cap " +
                          std::to_string(caps.states));
  }
  std::vector<Permutation> out;
  out.reserve(total);
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{1});
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace permtest
