#include "permtest/group_table.hpp"

#include <algorithm>
#include <numeric>

#include "permtest/errors.hpp"

namespace permtest {

GroupTable::GroupTable(std::uint32_t order, std::vector<std::uint32_t> table)
    : order_(order), table_(std::move(table)) {
  if (order_ == 0) throw ValidationError("a group needs at least one element");
  if (table_.size() != static_cast<std::size_t>(order_) * order_) {
    throw ValidationError("multiplication table must have order^2 entries");
  }
  for (std::uint32_t v : table_) {
    if (v >= order_) throw ValidationError("multiplication table entry out of range");
  }
  for (std::uint32_t a = 0; a < order_; ++a) {
    for (std::uint32_t b = 0; b < order_; ++b) {
      for (std::uint32_t c = 0; c < order_; ++c) {
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
          throw ValidationError("multiplication table is not associative");
        }
      }
    }
  }
  bool found = false;
  for (std::uint32_t e = 0; e < order_ && !found; ++e) {
    bool is_identity = true;
    for (std::uint32_t a = 0; a < order_ && is_identity; ++a) {
      is_identity = multiply(e, a) == a && multiply(a, e) == a;
    }
    if (is_identity) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw ValidationError("multiplication table has no identity");
  inverse_.assign(order_, order_);
  for (std::uint32_t a = 0; a < order_; ++a) {
    for (std::uint32_t b = 0; b < order_; ++b) {
      if (multiply(a, b) == identity_ && multiply(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] == order_) throw ValidationError("multiplication table has an element without inverse");
  }
}

GroupTable GroupTable::cyclic_product(const std::vector<std::uint32_t>& moduli) {
  std::uint32_t order = 1;
  for (std::uint32_t m : moduli) {
    if (m == 0) throw ValidationError("cyclic factor of order zero");
    order *= m;
  }
  auto decode = [&](std::uint32_t x) {
    std::vector<std::uint32_t> digits(moduli.size());
    for (std::size_t i = moduli.size(); i-- > 0;) {
      digits[i] = x % moduli[i];
      x /= moduli[i];
    }
    return digits;
  };
  std::vector<std::uint32_t> table(static_cast<std::size_t>(order) * order);
  for (std::uint32_t a = 0; a < order; ++a) {
    auto da = decode(a);
    for (std::uint32_t b = 0; b < order; ++b) {
      auto db = decode(b);
      std::uint32_t c = 0;
      for (std::size_t i = 0; i < moduli.size(); ++i) c = c * moduli[i] + (da[i] + db[i]) % moduli[i];
      table[a * order + b] = c;
    }
  }
  return GroupTable(order, std::move(table));
}

GroupTable GroupTable::symmetric(std::uint32_t k) {
  std::vector<Permutation> elements = all_permutations(k);
  const auto order = static_cast<std::uint32_t>(elements.size());
  std::vector<std::uint32_t> table(static_cast<std::size_t>(order) * order);
  for (std::uint32_t a = 0; a < order; ++a) {
    for (std::uint32_t b = 0; b < order; ++b) {
      Permutation c = elements[a] * elements[b];
      auto it = std::lower_bound(elements.begin(), elements.end(), c);
      table[a * order + b] = static_cast<std::uint32_t>(it - elements.begin());
    }
  }
  return GroupTable(order, std::move(table));
}

SGraph quotient_graph(const GroupTable& group, const std::vector<std::uint32_t>& generators) {
  std::vector<Permutation> perms;
  for (std::uint32_t g : generators) {
    if (g >= group.order()) throw ValidationError("generator is not a group element");
    std::vector<Point> images(group.order());
    for (std::uint32_t x = 0; x < group.order(); ++x) images[x] = group.multiply(g, x) + 1;
    perms.push_back(Permutation::from_images(std::move(images)));
  }
  return SGraph(PermTuple(std::move(perms), group.order()));
}

}  // namespace permtest
