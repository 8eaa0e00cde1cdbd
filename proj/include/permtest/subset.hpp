#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace permtest {

/// A subset of {0, ..., universe-1} stored as a packed bit set.
class Subset {
 public:
  explicit Subset(std::size_t universe = 0);

  std::size_t universe() const noexcept { return universe_; }
  bool test(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  std::size_t count() const noexcept;
  std::vector<std::size_t> members() const;

  /// Keeps positions `keep[0], keep[1], ...` as the new positions 0, 1, ...
  Subset project(const std::vector<std::size_t>& keep) const;

  /// Bit string, position 0 first.
  std::string to_bitstring() const;

  friend bool operator==(const Subset&, const Subset&) = default;
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

  std::size_t hash() const noexcept;

 private:
  std::size_t universe_;
  std::vector<std::uint64_t> blocks_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept { return s.hash(); }
};

}  // namespace permtest
