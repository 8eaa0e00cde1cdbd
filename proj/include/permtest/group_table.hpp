#pragma once

#include <cstdint>
#include <vector>

#include "permtest/sgraph.hpp"

namespace permtest {

/// A finite group given by its multiplication table on elements 0..m-1.
class GroupTable {
 public:
  /// table[a * m + b] = a·b. Throws ValidationError unless the table is a group.
  GroupTable(std::uint32_t order, std::vector<std::uint32_t> table);

  /// Z/m1 x ... x Z/mk with lexicographic element numbering.
  static GroupTable cyclic_product(const std::vector<std::uint32_t>& moduli);
  /// Sym(k) acting on itself, elements in lexicographic order of image sequences.
  static GroupTable symmetric(std::uint32_t k);

  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const { return table_[a * order_ + b]; }
  std::uint32_t identity() const noexcept { return identity_; }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }

 private:
  std::uint32_t order_;
  std::vector<std::uint32_t> table_;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> inverse_;
};

/// Left-multiplication graph: vertex x+1 stands for element x, and label i sends x to g_i·x.
SGraph quotient_graph(const GroupTable& group, const std::vector<std::uint32_t>& generators);

}  // namespace permtest
