#include <doctest.h>

#include "oracles.hpp"
#include "permtest/dsl.hpp"
#include "permtest/errors.hpp"
#include "permtest/presets.hpp"
#include "permtest/rng.hpp"
#include "permtest/solutions.hpp"
#include "permtest/statistics.hpp"
#include "permtest/testers.hpp"
#include "permtest/verify.hpp"

using namespace permtest;

namespace {
Permutation cyc(std::uint32_t n, std::vector<std::vector<Point>> cycles) { return Permutation::from_cycles(n, cycles); }
PermTuple pair(const Permutation& a, const Permutation& b) { return PermTuple({a, b}); }
Rational q(long a, long b = 1) { return make_rational(a, b); }
}  // namespace

TEST_CASE("seeding") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(5, 9) == derive_seed(5, 9));
  Rng a = make_rng(42), b = make_rng(42);
  CHECK(a() == b());
  CHECK(kRngFamily == "mt19937_64+splitmix64/1");
}

TEST_CASE("sas") {
  EquationSystem comm = presets::comm(2);
  PermTuple sol = pair(cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}, {2, 4}}));
  PermTuple far = pair(cyc(3, {{1, 2}}), cyc(3, {{1, 3}}));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Verdict v = sas(sol, comm, 1 + seed % 7, seed);
    CHECK(v.accepted);
    CHECK(v.queries_used == 4 * (1 + seed % 7));
    CHECK(v.seed == seed);
    CHECK(v.rng == kRngFamily);
    CHECK(includes(SGraph(sol), v.transcript));
    Verdict r = sas(far, comm, 1, seed);
    CHECK_FALSE(r.accepted);
  }
  CHECK(sas(far, comm, 10, 3).transcript == sas(far, comm, 10, 3).transcript);
  CHECK(sas(sol, EquationSystem({"X", "Y"}, {}), 5, 1).accepted);
  CHECK(sas(sol, EquationSystem({"X", "Y"}, {}), 5, 1).queries_used == 0);
  CHECK_THROWS_AS(sas(PermTuple({cyc(3, {{1, 2}})}), comm, 1, 1), ValidationError);
}

TEST_CASE("exact sas rejection probability") {
  EquationSystem comm = presets::comm(2);
  CHECK(sas_reject_probability_exact(pair(cyc(3, {{1, 2}}), cyc(3, {{1, 3}})), comm, 1) == 1);
  CHECK(sas_reject_probability_exact(pair(Permutation::identity(3), Permutation::identity(3)), comm, 5) == 0);
  // Two equations, one failing on every point and one always holding: L/r = 1/2 per round.
  EquationSystem two = parse_system("letters X Y\nX Y = Y X\nX = X\n");
  PermTuple t = pair(cyc(3, {{1, 2}}), cyc(3, {{1, 3}}));
  CHECK(sas_reject_probability_exact(t, two, 1) == q(1, 2));
  CHECK(sas_reject_probability_exact(t, two, 2) == q(3, 4));
  // L_E / r = 1/3 and k = 2 gives 1 - (2/3)^2 = 5/9.
  EquationSystem three = parse_system("letters X Y\nX Y = Y X\nX = X\nY = Y\n");
  CHECK(sas_reject_probability_exact(t, three, 2) == q(5, 9));

  std::mt19937 gen(19);
  for (const auto& e : {presets::comm(2), presets::baumslag_solitar(2, 3)}) {
    for (int i = 0; i < 200; ++i) {
      PermTuple r = oracle::random_tuple(1 + i % 6, 2, gen);
      CHECK(verify::sas_single_round_by_enumeration(r, e) == local_defect(r, e) / static_cast<unsigned long>(e.r()));
      CHECK(sas_reject_probability_exact(r, e, 1) == local_defect(r, e) / static_cast<unsigned long>(e.r()));
    }
  }
}

TEST_CASE("lsm parameters") {
  CHECK(lsm_params(3, q(1, 2)) == 3200);
  CHECK(lsm_params(0, 1) == 100);
  CHECK(lsm_params(4, q(1, 3)) == 14400);
  CHECK(lsm_params(5, q(2, 3)) == 7200);
  for (std::size_t p = 0; p < 20; ++p) CHECK(lsm_params(p + 1, q(1, 3)) == 2 * lsm_params(p, q(1, 3)));
  CHECK(lsm_params(1, q(3, 7)) == 1089);  // ceil(200 * 49 / 9) = ceil(1088.9)
  CHECK_THROWS_AS(lsm_params(80, q(1, 2)), InfeasibleError);
  CHECK_THROWS_AS(lsm_params(2, 0), ValidationError);
}

TEST_CASE("lsm context and decisions") {
  EquationSystem comm = presets::comm(2);
  WordSet rel = relators(comm);
  auto ctx2 = make_lsm_context(comm, 2, rel);
  CHECK(ctx2->solution_distributions.size() == 1);
  CHECK(ctx2->solution_count == 4);
  CHECK(make_lsm_context(presets::heisenberg(), 1, ball(3, 2))->solution_distributions.size() == 1);

  WordSet p = ball(2, 2);
  p.merge(rel);
  auto ctx = make_lsm_context(comm, 4, p);
  CHECK(ctx->solution_distributions.size() <= ctx->solution_count);
  CHECK(std::is_sorted(ctx->solution_distributions.begin(), ctx->solution_distributions.end()));

  LsmContextCache cache;
  auto first = cache.get(comm, 4, p);
  auto second = cache.get(comm, 4, p);
  CHECK(first == second);
  CHECK(cache.size() == 1);

  std::mt19937 gen(23);
  auto ctx_rel = make_lsm_context(comm, 4, rel);
  for (const auto& s : enumerate_solutions(comm, 4)) {
    Verdict v = lsm(s, *ctx_rel, 5, 0, 7);
    CHECK(v.accepted);
    CHECK(v.queries_used <= 5 * rel.total_length());
  }
  for (int i = 0; i < 50; ++i) {
    PermTuple r = oracle::random_tuple(4, 2, gen);
    CHECK(lsm(r, *ctx, 3, 1, i).accepted);
    Verdict v = lsm(r, *ctx, 20, q(1, 10), i);
    CHECK(v.queries_used <= 20 * p.total_length());
    CHECK(includes(SGraph(r), v.transcript));
  }
}

TEST_CASE("aggregated lsm follows the same law") {
  EquationSystem comm = presets::comm(2);
  WordSet p = relators(comm);
  auto ctx = make_lsm_context(comm, 3, p);
  PermTuple t = pair(cyc(3, {{1, 2}}), Permutation::identity(3));
  PermTuple mixed = pair(cyc(4, {{1, 2}}), cyc(4, {{2, 3}}));
  auto ctx4 = make_lsm_context(comm, 4, p);
  const int trials = 4000;
  int acc_a = 0, acc_b = 0;
  for (int i = 0; i < trials; ++i) {
    acc_a += lsm(mixed, *ctx4, 4, q(1, 4), derive_seed(1, i)).accepted;
    acc_b += lsm_aggregated(mixed, *ctx4, 4, q(1, 4), derive_seed(2, i)).accepted;
  }
  RateEstimate a = clopper_pearson(acc_a, trials, 0.999);
  RateEstimate b = clopper_pearson(acc_b, trials, 0.999);
  CHECK(a.low <= b.high);
  CHECK(b.low <= a.high);
  CHECK(lsm_aggregated(t, *ctx, 1'000'000'000, q(1, 2), 3).queries_used <= 3 * p.total_length());
}

TEST_CASE("distinguishability") {
  EquationSystem comm = presets::comm(2);
  WordSet p = ball(2, 2);
  p.merge(relators(comm));
  Distinguishability zero = distinguishability(comm, 3, p, 0);
  REQUIRE(zero.delta);
  CHECK(*zero.delta == 0);

  Distinguishability d = distinguishability(comm, 3, p, q(2, 3));
  CHECK(d.solutions == 18);
  // Oracle: every tuple with its nearest-solution distance, then min TV over solution/far pairs.
  auto sols = enumerate_solutions(comm, 3);
  std::vector<PermTuple> far;
  for_each_tuple(3, 2, Caps{}, [&](const PermTuple& t) {
    if (nearest_in(t, sols)->distance >= q(2, 3)) far.push_back(t);
    return true;
  });
  CHECK(d.far_tuples == far.size());
  CHECK(far_tuples(comm, 3, q(2, 3)) == far);
  Rational best = 2;
  for (const auto& s : sols) {
    for (const auto& f : far) best = std::min(best, tv_distance(local_distribution(s, p), local_distribution(f, p)));
  }
  REQUIRE(d.delta);
  CHECK(*d.delta == best);

  WordSet smaller = relators(comm);
  Distinguishability ds = distinguishability(comm, 3, smaller, q(2, 3));
  CHECK(*ds.delta <= *d.delta);

  Distinguishability none = distinguishability(comm, 2, p, q(1, 3));
  CHECK_FALSE(none.delta);
  CHECK(none.far_tuples == 0);
}

TEST_CASE("Clopper-Pearson intervals") {
  RateEstimate all = clopper_pearson(100, 100);
  CHECK(all.rate == 1.0);
  CHECK(all.high == 1.0);
  CHECK(all.low == doctest::Approx(std::pow(0.005, 1.0 / 100)).epsilon(1e-9));
  RateEstimate none = clopper_pearson(0, 50);
  CHECK(none.low == 0.0);
  CHECK(none.high == doctest::Approx(1 - std::pow(0.005, 1.0 / 50)).epsilon(1e-9));
  RateEstimate half = clopper_pearson(50, 100, 0.95);
  CHECK(half.low == doctest::Approx(0.3983).epsilon(1e-3));
  CHECK(half.high == doctest::Approx(0.6017).epsilon(1e-3));
  CHECK(half.contains(0.5));
  CHECK_THROWS_AS(clopper_pearson(3, 2), ValidationError);

  auto always = [](std::uint64_t) { return true; };
  RateEstimate r = empirical_rate(always, 200, 9);
  CHECK(r.rate == 1.0);
  CHECK(r.high == 1.0);
  auto coin = [](std::uint64_t seed) { return make_rng(seed)() % 2 == 0; };
  CHECK(empirical_rate(coin, 500, 4).successes == empirical_rate(coin, 500, 4).successes);
}

TEST_CASE("empirical sas rejection is calibrated") {
  EquationSystem comm = presets::comm(2);
  PermTuple t = pair(cyc(4, {{1, 2}}), cyc(4, {{2, 3}}));
  Rational p = sas_reject_probability_exact(t, comm, 1);
  REQUIRE(p > 0);
  REQUIRE(p < 1);
  int covered = 0;
  const int suites = 200;
  for (int s = 0; s < suites; ++s) {
    RateEstimate e = empirical_rate([&](std::uint64_t seed) { return sas(t, comm, 1, seed).accepted; }, 300,
                                    derive_seed(77, s));
    covered += e.contains(1 - to_double(p));
  }
  CHECK(covered >= 194);
}
