#pragma once

#include <cstddef>
#include <cstdint>

namespace permtest {

/// Enumeration limits. Operations that would exceed one throw InfeasibleError.
struct Caps {
  /// Candidate tuples or permutations visited by exhaustive enumeration.
  std::uint64_t states = 10'000'000;
  /// Vertex subsets visited by the exact Cheeger computation.
  std::uint64_t subsets = std::uint64_t{1} << 22;
  /// Words in a ball of the free group.
  std::size_t words = 1'000'000;
  /// Words in a path set of a partial S-graph.
  std::size_t path_words = 100'000;
};

}  // namespace permtest
