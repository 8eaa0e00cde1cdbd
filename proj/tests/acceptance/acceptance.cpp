// Acceptance checks. Each criterion prints exactly one PASS or FAIL line.
//
//   permtest_acceptance                 run every criterion
//   permtest_acceptance --criterion N   run criterion N only
//   permtest_acceptance --jobs J        worker threads for the heavy suites

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "permtest/dsl.hpp"
#include "permtest/io.hpp"
#include "permtest/local_stats.hpp"
#include "permtest/metrics.hpp"
#include "permtest/presets.hpp"
#include "permtest/rng.hpp"
#include "permtest/solutions.hpp"
#include "permtest/statistics.hpp"
#include "permtest/testers.hpp"
#include "permtest/verify.hpp"

using namespace permtest;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

unsigned g_jobs = 1;

std::string suite_detail(const verify::SuiteReport& r) {
  std::ostringstream s;
  s << r.instances << " checks, " << r.failures << " failures";
  if (!r.first_failure.empty()) s << "; first: " << r.first_failure;
  return s.str();
}

Outcome word_evaluation() {
  const std::vector<std::string> names{"X", "Y"};
  Word w = parse_word("X Y X^-1 Y^-1", names);
  PermTuple t({Permutation::from_cycles(3, {{1, 2, 3}}), Permutation::from_cycles(3, {{1, 2}})});
  Permutation got = evaluate(w, t);
  bool ok = got == Permutation::from_cycles(3, {{1, 3, 2}});
  return {ok, "XYX^-1Y^-1 at ((1 2 3), (1 2)) = " + got.cycle_string()};
}

Outcome sas_defect_identity() {
  verify::SasDefectOptions o;
  o.exhaustive_n_max = 4;
  o.random_n = 5;
  o.random_count = 10'000;
  verify::SuiteReport r = verify::sas_defect_suite({presets::comm(2), presets::baumslag_solitar(2, 3)}, o);
  return {r.passed(), "comm:2 and bs:2,3, exhaustive n <= 4 plus 10^4 random at n = 5: " + suite_detail(r)};
}

Outcome query_accounting() {
  EquationSystem comm = presets::comm(2);
  Rng rng = make_rng(derive_seed(3, 0));
  std::uint64_t sas_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    std::uint32_t n = 1 + static_cast<std::uint32_t>(i % 8);
    std::uint64_t k = 1 + rng() % 40;
    Verdict v = sas(random_tuple(n, 2, rng), comm, k, derive_seed(3, i + 1));
    sas_bad += v.queries_used != 4 * k;
  }
  WordSet p = ball(2, 2);
  p.merge(relators(comm));
  std::map<std::uint32_t, std::shared_ptr<const LsmContext>> contexts;
  for (std::uint32_t n = 2; n <= 4; ++n) contexts[n] = make_lsm_context(comm, n, p);
  std::uint64_t lsm_bad = 0;
  std::uint64_t max_ratio_num = 0, max_ratio_den = 1;
  for (int i = 0; i < 1000; ++i) {
    std::uint32_t n = 2 + static_cast<std::uint32_t>(i % 3);
    std::uint64_t k = 1 + rng() % 40;
    Verdict v = lsm(random_tuple(n, 2, rng), *contexts[n], k, make_rational(1, 4), derive_seed(4, i));
    std::uint64_t bound = k * p.total_length();
    lsm_bad += v.queries_used > bound;
    if (v.queries_used * max_ratio_den > max_ratio_num * bound) {
      max_ratio_num = v.queries_used;
      max_ratio_den = bound;
    }
  }
  std::ostringstream s;
  s << "sas: " << sas_bad << "/1000 runs off 4k; lsm: " << lsm_bad << "/1000 runs above k*sum|w| (max used "
    << max_ratio_num << " of " << max_ratio_den << ")";
  return {sas_bad == 0 && lsm_bad == 0, s.str()};
}

Outcome inclusion_lemma() {
  verify::InclusionOptions o;
  o.n_min = 4;
  o.n_max = 7;
  o.graphs_per_n = 50;
  o.max_edges = 3;
  o.max_vertex = 4;
  o.jobs = g_jobs;
  verify::SuiteReport r = verify::inclusion_suite(o);
  return {r.passed(), suite_detail(r)};
}

Outcome census() {
  verify::CensusOptions o;
  o.d = 2;
  o.n_max = 4;
  auto machines = sample_machines();
  verify::SuiteReport r = verify::census_suite(machines, o);
  std::set<std::size_t> qs;
  for (const auto& m : machines) qs.insert(m.max_queries);
  bool covers = qs.count(1) && qs.count(2) && qs.count(3);
  return {r.passed() && covers, std::to_string(machines.size()) + " machines with q in {1,2,3}: " + suite_detail(r)};
}

Outcome diagonal() {
  verify::DiagonalOptions o;
  o.n_min = 3;
  o.n_max = 6;
  o.jobs = g_jobs;
  o.caps.subsets = std::uint64_t{1} << 30;
  verify::SuiteReport r = verify::diagonal_suite(presets::comm(2), o);
  return {r.passed(), suite_detail(r)};
}

Outcome lsm_soundness() {
  EquationSystem comm = presets::comm(2);
  const Rational eps = make_rational(2, 3);
  const std::uint64_t trials = 2000;
  const double target = 0.99;
  std::ostringstream s;
  bool ok = true;
  double worst = 1.0;
  for (std::uint32_t n = 3; n <= 5; ++n) {
    WordSet p = ball(2, 2);
    p.merge(relators(comm));
    Distinguishability d = distinguishability(comm, n, p, eps);
    if (!d.delta || *d.delta == 0) {
      s << "n=" << n << ": delta* " << (d.delta ? "0" : "undefined") << ", skipped; ";
      continue;
    }
    Rational delta_star = *d.delta;
    std::uint64_t k = lsm_params(p.size(), delta_star);
    Rational delta = delta_star / 2;
    auto ctx = make_lsm_context(comm, n, p);
    auto sols = enumerate_solutions(comm, n);
    auto far = far_tuples(comm, n, eps);
    Rng pick = make_rng(derive_seed(7, n));
    std::vector<std::pair<PermTuple, bool>> cases;
    for (int i = 0; i < 20; ++i) cases.emplace_back(sols[pick() % sols.size()], true);
    for (int i = 0; i < 20; ++i) cases.emplace_back(far[pick() % far.size()], false);
    std::vector<RateEstimate> rates(cases.size());
    verify::parallel_for(cases.size(), g_jobs, [&](std::size_t c) {
      const auto& [t, accept_expected] = cases[c];
      rates[c] = empirical_rate(
          [&](std::uint64_t seed) { return lsm_aggregated(t, *ctx, k, delta, seed).accepted == accept_expected; },
          trials, derive_seed(derive_seed(11, n), c));
    });
    double low_rate = 1.0;
    for (const auto& r : rates) {
      low_rate = std::min(low_rate, r.rate);
      if (r.high < target) ok = false;
    }
    worst = std::min(worst, low_rate);
    s << "n=" << n << ": delta*=" << to_fraction_string(delta_star) << ", k=" << k << ", " << sols.size()
      << " solutions, " << far.size() << " far, min correct rate " << low_rate << "; ";
  }
  s << "worst " << worst << " over " << trials << " trials per tuple";
  return {ok, s.str()};
}

Outcome transfer() {
  std::string base = PERMTEST_FIXTURE_DIR;
  verify::TransferOptions o;
  o.exhaustive_n_max = 4;
  o.random_count = 1000;
  o.random_n_max = 8;
  bool ok = true;
  std::ostringstream s;
  for (const char* dir : {"z2_pair", "z2_pair_swapped"}) {
    std::string d = base + "/" + dir;
    verify::TransferFixture fx;
    fx.name = dir;
    fx.source = load_system(d + "/source.eq");
    fx.target = load_system(d + "/target.eq");
    fx.lambda1 = io::load_map(d + "/lambda1.json");
    fx.lambda2 = io::load_map(d + "/lambda2.json");
    fx.correction = io::load_correction(d + "/corrections.json", fx.source.letter_names());
    verify::SuiteReport r = verify::transfer_suite(fx, o);
    ok = ok && r.passed();
    s << dir << ": " << suite_detail(r) << "; ";
  }
  return {ok, s.str()};
}

Outcome presets_fidelity() {
  std::string golden = PERMTEST_GOLDEN_DIR;
  std::uint64_t failures = 0;
  std::ostringstream s;
  for (const char* spec : {"comm:1", "comm:2", "comm:3", "comm:6", "bs:1,2", "bs:2,3", "bs:-1,1", "surface:1",
                           "surface:2", "surface:3", "heisenberg", "sl:2", "sl:3", "sl:4", "abels:2", "abels:3",
                           "abels:7"}) {
    EquationSystem e = presets::from_spec(spec);
    if (parse_system(render_system(e)) != e) {
      ++failures;
      s << "round trip failed for " << spec << "; ";
    }
  }
  auto sorted = [](const EquationSystem& e) {
    std::vector<std::pair<Word, Word>> v;
    for (const auto& eq : e.equations()) v.emplace_back(eq.lhs, eq.rhs);
    std::sort(v.begin(), v.end());
    return std::make_pair(e.letter_names(), v);
  };
  std::vector<std::pair<std::string, EquationSystem>> files{
      {"comm3.eq", presets::comm(3)},      {"bs23.eq", presets::baumslag_solitar(2, 3)},
      {"surface2.eq", presets::surface(2)}, {"heisenberg.eq", presets::heisenberg()},
      {"sl3.eq", presets::special_linear(3)}, {"abels2.eq", presets::abels(2)},
      {"abels3.eq", presets::abels(3)}};
  for (const auto& [file, e] : files) {
    if (sorted(load_system(golden + "/" + file)) != sorted(e)) {
      ++failures;
      s << file << " differs from the preset; ";
    }
  }
  EquationSystem sl3 = presets::special_linear(3);
  Word torsion = parse_word("s12 s21^-1 s12", sl3.letter_names()).power(4);
  bool has_torsion = std::any_of(sl3.equations().begin(), sl3.equations().end(),
                                 [&](const Equation& eq) { return eq.lhs == torsion && eq.rhs.empty(); });
  if (!has_torsion) {
    ++failures;
    s << "sl:3 lacks (s12 s21^-1 s12)^4 = 1; ";
  }
  EquationSystem a2 = presets::abels(2);
  s << "17 presets round-tripped, 7 golden files, abels has " << a2.r() << " equations";
  return {failures == 0 && a2.r() == 15, s.str()};
}

Outcome inverseless() {
  verify::InverselessOptions o;
  o.n_max = 4;
  verify::SuiteReport r = verify::inverseless_suite(presets::comm(2), o);
  return {r.passed(), suite_detail(r)};
}

Outcome metric_properties() {
  const int instances = 10'000;
  Rng rng = make_rng(derive_seed(12, 0));
  std::map<std::string, std::uint64_t> failures;
  auto check = [&](bool ok, const char* what) {
    if (!ok) ++failures[what];
  };
  auto metric = [&](const Rational& xx, const Rational& xy, const Rational& yx, const Rational& yz,
                    const Rational& xz, bool same, const char* what) {
    check(xx == 0, what);
    check((xy == 0) == same, what);
    check(xy == yx, what);
    check(xz <= xy + yz, what);
    check(xy >= 0, what);
  };
  for (int i = 0; i < instances; ++i) {
    std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 7);
    Permutation a = random_permutation(n, rng), b = random_permutation(n, rng), c = random_permutation(n, rng);
    if (rng() % 4 == 0) b = a;
    metric(hamming(a, a), hamming(a, b), hamming(b, a), hamming(b, c), hamming(a, c), a == b, "hamming");
    check(hamming(a, b) <= 1, "hamming");

    PermTuple s = random_tuple(n, 2, rng), t = random_tuple(n, 2, rng), u = random_tuple(n, 2, rng);
    if (rng() % 4 == 0) t = s;
    metric(tuple_distance(s, s), tuple_distance(s, t), tuple_distance(t, s), tuple_distance(t, u),
           tuple_distance(s, u), s == t, "tuple");

    std::uint32_t m1 = 1 + static_cast<std::uint32_t>(rng() % 7);
    std::uint32_t m2 = 1 + static_cast<std::uint32_t>(rng() % 7);
    std::uint32_t m3 = 1 + static_cast<std::uint32_t>(rng() % 7);
    Permutation f = random_permutation(m1, rng), g = random_permutation(m2, rng), h = random_permutation(m3, rng);
    if (rng() % 4 == 0) g = f;
    metric(flexible_distance(f, f), flexible_distance(f, g), flexible_distance(g, f), flexible_distance(g, h),
           flexible_distance(f, h), f == g, "flexible");
    check(flexible_distance(f, g) <= 1, "flexible");
    std::uint32_t lo = std::min(f.n(), g.n()), hi = std::max(f.n(), g.n());
    check(1 - flexible_distance(f, g) <= make_rational(lo, hi), "flexible");
    if (f.n() == c.n()) check(flexible_distance(f, c) == hamming(f, c), "flexible");

    WordSet p = ball(2, 1 + static_cast<std::size_t>(rng() % 2));
    LocalDistribution ds = local_distribution(s, p), dt = local_distribution(t, p), du = local_distribution(u, p);
    check(ds.total_mass() == 1 && dt.total_mass() == 1 && du.total_mass() == 1, "normalization");
    for (const auto& [sub, mass] : ds.support()) check(mass > 0, "normalization");
    Rational st = tv_distance(ds, dt);
    check(tv_distance(ds, ds) == 0, "tv");
    check(st == tv_distance(dt, ds), "tv");
    check(st >= 0 && st <= 1, "tv");
    check(tv_distance(ds, du) <= st + tv_distance(dt, du), "tv");
    check((st == 0) == (ds == dt), "tv");

    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (rng() % 2) keep.push_back(j);
    }
    check(tv_distance(ds.marginal(keep), dt.marginal(keep)) <= st, "tv monotonicity");
    check(ds.marginal(keep).total_mass() == 1, "normalization");
    WordSet sub;
    for (std::size_t j : keep) sub.insert(p.words()[j]);
    check(local_distribution(s, sub) == ds.marginal(keep), "tv monotonicity");
  }
  EquationSystem comm = presets::comm(2);
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for_each_tuple(n, 2, Caps{}, [&](const PermTuple& t) {
      check((local_defect(t, comm) == 0) == is_solution(t, comm), "defect");
      return true;
    });
  }
  std::uint64_t total = 0;
  std::ostringstream s;
  s << instances << " random instances per family";
  for (const auto& [what, count] : failures) {
    total += count;
    s << "; " << what << ": " << count << " failures";
  }
  if (total == 0) s << ", zero failures";
  return {total == 0, s.str()};
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria{
      {1, "word evaluation ground truth", word_evaluation},
      {2, "sas single-round rejection equals L_E/r", sas_defect_identity},
      {3, "query accounting for sas and lsm", query_accounting},
      {4, "inclusion probability closed form", inclusion_lemma},
      {5, "transcript census bound and verdict determinism", census},
      {6, "product-graph diagonal suite", diagonal},
      {7, "fixed-n lsm soundness and completeness", lsm_soundness},
      {8, "transfer suite on the Z^2 pair", transfer},
      {9, "preset fidelity", presets_fidelity},
      {10, "inverseless model", inverseless},
      {11, "metric and distribution properties", metric_properties},
  };
  int only = 0;
  g_jobs = std::max(1U, std::thread::hardware_concurrency());
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (a == "--jobs" && i + 1 < argc) {
      g_jobs = static_cast<unsigned>(std::max(1, std::atoi(argv[++i])));
    } else {
      std::cerr << "usage: permtest_acceptance [--criterion N] [--jobs J]\n";
      return 2;
    }
  }
  bool all = true;
  int ran = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail << " ["
              << std::fixed;
    std::cout.precision(2);
    std::cout << secs << "s]" << std::endl;
    std::cout.unsetf(std::ios::fixed);
    all = all && o.passed;
  }
  if (ran == 0) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return all ? 0 : 1;
}
