#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permtest/caps.hpp"
#include "permtest/census.hpp"
#include "permtest/equations.hpp"
#include "permtest/partial_sgraph.hpp"
#include "permtest/transfer.hpp"

namespace permtest::verify {

/// Outcome of a verification suite: how many instances ran and which failed.
struct SuiteReport {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  /// Free-form summary lines (counts, extremes, cache sizes).
  std::vector<std::string> notes;

  bool passed() const noexcept { return failures == 0 && instances > 0; }
  void fail(const std::string& what);
};

/// Every connected partial S-graph over `d` labels with 1..max_edges edges whose
/// vertices lie in [1, max_vertex], in a fixed order.
std::vector<PartialSGraph> small_partial_graphs(std::uint32_t d, std::size_t max_edges, Point max_vertex);

struct InclusionOptions {
  std::uint32_t d = 2;
  std::uint32_t n_min = 4;
  std::uint32_t n_max = 7;
  std::size_t graphs_per_n = 50;
  std::size_t max_edges = 3;
  Point max_vertex = 4;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  Caps caps;
};
/// Closed-form inclusion probability against enumeration of Sym(n), at every base vertex.
SuiteReport inclusion_suite(const InclusionOptions& options);

struct DiagonalOptions {
  std::uint32_t n_min = 3;
  std::uint32_t n_max = 6;
  unsigned jobs = 1;
  Caps caps;
};
/// Diagonal checks for connected G in GSOL_E(n) and every G' in GSOL_E(n-1) on the product G' x G:
/// the half-size bound per component, the Cheeger lower bound, the restriction upper bound,
/// and that res_n(G) moves at most one point per label.
SuiteReport diagonal_suite(const EquationSystem& system, const DiagonalOptions& options);

struct CensusOptions {
  std::uint32_t d = 2;
  std::uint32_t n_max = 4;
  Caps caps;
};
/// Transcript counts against C(q,r) n^r (2q)^(q-r), and verdict determinism per transcript.
SuiteReport census_suite(const std::vector<DeterministicMachine>& machines, const CensusOptions& options);

/// Two presentations of the same group joined by maps in both directions.
struct TransferFixture {
  std::string name;
  EquationSystem source;  ///< E1 over S
  EquationSystem target;  ///< E2 over T
  PresentationMap lambda1;  ///< F_S -> F_T
  PresentationMap lambda2;  ///< F_T -> F_S
  CorrectionData correction;
};

/// The Z^2 pair <X,Y | XY=YX> and <a,b,c | ab=ba, c=ab>. With `swapped` the
/// three-letter presentation plays the source role and the correction term for c is nontrivial.
TransferFixture z2_fixture(bool swapped);

struct TransferOptions {
  std::uint32_t exhaustive_n_max = 4;
  std::size_t random_count = 1000;
  std::uint32_t random_n_max = 8;
  std::uint64_t seed = 1;
  Caps caps;
};
/// Pseudo-inverse, Lipschitz and two-sided bounds, solution transport both ways,
/// and the round trip being the identity on solutions.
SuiteReport transfer_suite(const TransferFixture& fixture, const TransferOptions& options);

struct SasDefectOptions {
  std::uint32_t exhaustive_n_max = 4;
  std::uint32_t random_n = 5;
  std::size_t random_count = 10'000;
  std::uint64_t seed = 1;
  Caps caps;
};
/// Single-round rejection probability of sas, by enumerating every (equation, point)
/// sample through the oracle, against L_E(t)/r and the closed form.
SuiteReport sas_defect_suite(const std::vector<EquationSystem>& systems, const SasDefectOptions& options);

/// Rejection probability of one sas round computed by running every (equation, point) sample.
Rational sas_single_round_by_enumeration(const PermTuple& t, const EquationSystem& system);

struct InverselessOptions {
  std::uint32_t n_max = 4;
  std::size_t sas_runs = 200;
  std::uint64_t k = 10;
  std::uint64_t seed = 1;
  Caps caps;
};
/// SOL of the inverseless system equals {(s, s^-1)} over SOL_E(n), and sas on it never queries an inverse.
SuiteReport inverseless_suite(const EquationSystem& system, const InverselessOptions& options);

/// Runs body(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace permtest::verify
