#include "permtest/census.hpp"

#include <map>

#include "permtest/errors.hpp"
#include "permtest/permutation.hpp"

namespace permtest {

namespace {

std::uint64_t census_bound(std::uint64_t q, std::uint64_t r, std::uint64_t n) {
  mpz_class binom, power_n, power_q;
  mpz_bin_uiui(binom.get_mpz_t(), q, r);
  mpz_ui_pow_ui(power_n.get_mpz_t(), n, r);
  mpz_ui_pow_ui(power_q.get_mpz_t(), 2 * q, q - r);
  mpz_class value = binom * power_n * power_q;
  if (mpz_sizeinbase(value.get_mpz_t(), 2) > 63) return UINT64_MAX;
  return value.get_ui();
}

}  // namespace

bool CensusResult::within_bounds() const {
  for (const CensusBucket& b : buckets) {
    if (b.transcripts > b.bound) return false;
  }
  return true;
}

CensusResult transcript_census(const DeterministicMachine& machine, std::uint32_t d, std::uint32_t n,
                               const Caps& caps) {
  CensusResult result;
  std::map<PartialSGraph, bool> seen;
  for_each_tuple(n, d, caps, [&](const PermTuple& t) {
    OracleTuple oracle(t);
    bool verdict = machine.run(oracle);
    if (oracle.queries() > machine.max_queries) {
      throw ValidationError("machine '" + machine.name + "' used " + std::to_string(oracle.queries()) +
                            " queries, more than its budget of " + std::to_string(machine.max_queries));
    }
    result.max_queries_used = std::max(result.max_queries_used, oracle.queries());
    ++result.graphs;
    auto [it, inserted] = seen.emplace(oracle.transcript(), verdict);
    if (!inserted && it->second != verdict) result.verdicts_consistent = false;
    return true;
  });
  const std::size_t q = machine.max_queries;
  for (std::size_t r = 0; r <= q; ++r) result.buckets.push_back({r, 0, census_bound(q, r, n)});
  for (const auto& [h, verdict] : seen) {
    std::size_t r = h.rank();
    if (r > q) throw ValidationError("transcript rank exceeds the query budget");
    ++result.buckets[r].transcripts;
  }
  return result;
}

std::vector<DeterministicMachine> sample_machines() {
  const Letter X{1, 1}, Y{2, 1};
  std::vector<DeterministicMachine> out;
  out.push_back({"probe", 1, [=](OracleTuple& o) { return o.query(1, X) == 1; }});
  out.push_back({"return-walk", 2, [=](OracleTuple& o) {
                   Point a = o.query(1, X);
                   return o.query(a, Y.inverse()) == 1;
                 }});
  out.push_back({"branching", 3, [=](OracleTuple& o) {
                   Point a = o.query(1, X);
                   if (a == 1) {
                     Point b = o.query(1, Y);
                     return o.query(b, Y) == 1;
                   }
                   Point b = o.query(a, Y);
                   return o.query(b, X.inverse()) == a;
                 }});
  out.push_back({"commutator-probe", 3, [=](OracleTuple& o) {
                   Point top = static_cast<Point>(o.n());
                   Point a = o.query(top, Y.inverse());
                   Point b = o.query(a, X);
                   return o.query(b, Y) == o.n() || b == a;
                 }});
  return out;
}

}  // namespace permtest
