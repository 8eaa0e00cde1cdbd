#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "permtest/caps.hpp"
#include "permtest/oracle.hpp"

namespace permtest {

/// A deterministic query machine: its queries and verdict depend only on oracle answers.
struct DeterministicMachine {
  std::string name;
  std::size_t max_queries = 0;
  std::function<bool(OracleTuple&)> run;
};

struct CensusBucket {
  std::size_t rank = 0;
  std::uint64_t transcripts = 0;
  /// C(q, r) * n^r * (2q)^(q-r).
  std::uint64_t bound = 0;
};

struct CensusResult {
  std::vector<CensusBucket> buckets;
  std::uint64_t graphs = 0;
  std::uint64_t max_queries_used = 0;
  /// Every pair of runs with the same transcript reached the same verdict.
  bool verdicts_consistent = true;
  bool within_bounds() const;
};

/// Runs the machine on every G in G_S(n) with |S| = d and tallies distinct transcripts by rank.
/// Throws ValidationError if the machine exceeds its declared query budget.
CensusResult transcript_census(const DeterministicMachine& machine, std::uint32_t d, std::uint32_t n,
                               const Caps& caps = {});

/// Small adaptive machines over two labels used by the census checks.
std::vector<DeterministicMachine> sample_machines();

}  // namespace permtest
