#include "permtest/subset.hpp"

#include <algorithm>
#include <bit>

#include "permtest/errors.hpp"

namespace permtest {

Subset::Subset(std::size_t universe) : universe_(universe), blocks_((universe + 63) / 64, 0) {}

bool Subset::test(std::size_t i) const {
  if (i >= universe_) throw ValidationError("subset position out of range");
  return (blocks_[i / 64] >> (i % 64)) & 1U;
}

void Subset::set(std::size_t i, bool value) {
  if (i >= universe_) throw ValidationError("subset position out of range");
  std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value) {
    blocks_[i / 64] |= bit;
  } else {
    blocks_[i / 64] &= ~bit;
  }
}

std::size_t Subset::count() const noexcept {
  std::size_t c = 0;
  for (std::uint64_t b : blocks_) c += static_cast<std::size_t>(std::popcount(b));
  return c;
}

std::vector<std::size_t> Subset::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < universe_; ++i) {
    if (test(i)) out.push_back(i);
  }
  return out;
}

Subset Subset::project(const std::vector<std::size_t>& keep) const {
  Subset out(keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j) out.set(j, test(keep[j]));
  return out;
}

std::string Subset::to_bitstring() const {
  std::string s(universe_, '0');
  for (std::size_t i = 0; i < universe_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.blocks_.begin(), a.blocks_.end(), b.blocks_.begin(),
                                                b.blocks_.end());
}

std::size_t Subset::hash() const noexcept {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t b : blocks_) h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace permtest
