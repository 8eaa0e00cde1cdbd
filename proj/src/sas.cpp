#include "permtest/errors.hpp"
#include "permtest/rng.hpp"
#include "permtest/solutions.hpp"
#include "permtest/testers.hpp"

namespace permtest {

Verdict sas(const PermTuple& t, const EquationSystem& system, std::uint64_t k, std::uint64_t seed) {
  check_shape(system, t);
  Verdict v;
  v.seed = seed;
  v.rng = std::string(kRngFamily);
  v.transcript = PartialSGraph(static_cast<std::uint32_t>(t.d()));
  if (system.r() == 0 || t.n() == 0) {
    v.accepted = true;
    return v;
  }
  Rng rng = make_rng(seed);
  std::uniform_int_distribution<std::size_t> pick_equation(0, system.r() - 1);
  std::uniform_int_distribution<Point> pick_point(1, t.n());
  OracleTuple oracle(t);
  bool accepted = true;
  for (std::uint64_t j = 0; j < k; ++j) {
    const Equation& eq = system[pick_equation(rng)];
    Point x = pick_point(rng);
    Point left = oracle.walk(eq.lhs, x);
    Point right = oracle.walk(eq.rhs, x);
    if (left != right) accepted = false;
  }
  v.accepted = accepted;
  v.queries_used = oracle.queries();
  v.inverse_queries = oracle.inverse_queries();
  v.transcript = oracle.transcript();
  return v;
}

Rational sas_reject_probability_exact(const PermTuple& t, const EquationSystem& system, std::uint64_t k) {
  check_shape(system, t);
  if (system.r() == 0 || t.n() == 0) return Rational(0);
  Rational single = local_defect(t, system) / static_cast<unsigned long>(system.r());
  Rational pass = 1 - single;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), pass.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), pass.get_den_mpz_t(), static_cast<unsigned long>(k));
  Rational all_pass(num, den);
  all_pass.canonicalize();
  return 1 - all_pass;
}

}  // namespace permtest
