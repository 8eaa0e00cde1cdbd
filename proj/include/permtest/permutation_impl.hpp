#pragma once

#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "permtest/errors.hpp"

namespace permtest {

template <class Engine>
Permutation random_permutation(std::uint32_t n, Engine& engine) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{1});
  for (std::uint32_t i = n; i > 1; --i) {
    std::uniform_int_distribution<std::uint32_t> pick(0, i - 1);
    std::swap(images[i - 1], images[pick(engine)]);
  }
  return Permutation::from_images(std::move(images));
}

template <class Visitor>
void for_each_tuple(std::uint32_t n, std::size_t d, const Caps& caps, Visitor&& visit) {
  std::uint64_t total = tuple_count(n, d);
  if (total > caps.states) {
    throw InfeasibleError("enumerating (" + std::to_string(n) + "!)^" + std::to_string(d) +
                          " tuples exceeds the state cap " + std::to_string(caps.states));
  }
  std::vector<Permutation> sym = all_permutations(n, caps);
  std::vector<std::size_t> counter(d, 0);
  std::vector<Permutation> current(d, sym.front());
  while (true) {
    for (std::size_t i = 0; i < d; ++i) current[i] = sym[counter[i]];
    if (!visit(PermTuple(current, n))) return;
    std::size_t pos = d;
    while (pos > 0) {
      --pos;
      if (++counter[pos] < sym.size()) break;
      counter[pos] = 0;
      if (pos == 0) return;
    }
    if (d == 0) return;
  }
}

}  // namespace permtest
