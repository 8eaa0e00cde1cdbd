#include "permtest/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "permtest/dsl.hpp"
#include "permtest/errors.hpp"
#include "permtest/metrics.hpp"
#include "permtest/oracle.hpp"
#include "permtest/rng.hpp"
#include "permtest/sgraph.hpp"
#include "permtest/solutions.hpp"
#include "permtest/testers.hpp"

namespace permtest::verify {

void SuiteReport::fail(const std::string& what) {
  if (failures == 0) first_failure = what;
  ++failures;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<PartialSGraph> small_partial_graphs(std::uint32_t d, std::size_t max_edges, Point max_vertex) {
  std::vector<LabelledEdge> all;
  for (Point u = 1; u <= max_vertex; ++u) {
    for (std::uint32_t s = 1; s <= d; ++s) {
      for (Point v = 1; v <= max_vertex; ++v) all.push_back({u, s, v});
    }
  }
  std::vector<PartialSGraph> out;
  std::vector<LabelledEdge> chosen;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    if (!chosen.empty()) {
      try {
        PartialSGraph h = PartialSGraph::from_edges(d, chosen);
        if (h.is_connected()) out.push_back(std::move(h));
      } catch (const ValidationError&) {
        return;  // a conflicting edge pair stays conflicting in every extension
      }
    }
    if (chosen.size() == max_edges) return;
    for (std::size_t i = start; i < all.size(); ++i) {
      chosen.push_back(all[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

namespace {

std::string describe(const PermTuple& t) { return t.to_string(); }

}  // namespace

SuiteReport inclusion_suite(const InclusionOptions& options) {
  SuiteReport report;
  report.name = "inclusion";
  std::vector<PartialSGraph> graphs = small_partial_graphs(options.d, options.max_edges, options.max_vertex);

  struct BaseData {
    Point base;
    WordSet bp;
    WordSet pstab;
  };
  std::vector<std::vector<BaseData>> bases(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (Point y0 : graphs[i].vertices()) {
      PathInvariants inv = path_invariants(graphs[i], y0, options.caps);
      bases[i].push_back({y0, inv.base_paths, inv.stabilizer_paths});
    }
  }

  struct Job {
    std::uint32_t n;
    PermTuple g;
  };
  std::vector<Job> jobs;
  for (std::uint32_t n = options.n_min; n <= options.n_max; ++n) {
    if (n < options.max_vertex) throw ValidationError("n must be at least the largest vertex label");
    Rng rng = make_rng(derive_seed(options.seed, n));
    for (std::size_t k = 0; k < options.graphs_per_n; ++k) jobs.push_back({n, random_tuple(n, options.d, rng)});
  }

  std::mutex mutex;
  std::vector<std::uint64_t> instances(jobs.size(), 0);
  parallel_for(jobs.size(), options.jobs, [&](std::size_t j) {
    const Job& job = jobs[j];
    SGraph g(job.g);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const PartialSGraph& h = graphs[i];
      Rational exact = inclusion_probability_exact(g, h, options.caps);
      mpz_class num, den;
      mpz_fac_ui(num.get_mpz_t(), job.n - h.vertex_count());
      mpz_fac_ui(den.get_mpz_t(), job.n - 1);
      Rational factor(num, den);
      factor.canonicalize();
      for (const BaseData& b : bases[i]) {
        Rational formula = factor * fragment_probability(g, b.bp, b.pstab);
        ++instances[j];
        if (formula != exact) {
          std::lock_guard<std::mutex> lock(mutex);
          report.fail("n=" + std::to_string(job.n) + " G=" + describe(job.g) + " H=" + h.to_string() +
                      " base=" + std::to_string(b.base) + ": formula " + to_fraction_string(formula) +
                      " vs enumeration " + to_fraction_string(exact));
        }
      }
    }
  });
  for (std::uint64_t c : instances) report.instances += c;
  report.notes.push_back(std::to_string(graphs.size()) + " connected partial graphs, " + std::to_string(jobs.size()) +
                         " random graphs, " + std::to_string(report.instances) + " (graph, H, base) checks");
  return report;
}

SuiteReport diagonal_suite(const EquationSystem& system, const DiagonalOptions& options) {
  SuiteReport report;
  report.name = "diagonal";
  if (options.n_min < 3) throw ValidationError("the diagonal suite needs n >= 3");
  CheegerCache cache;
  const std::size_t labels = system.d();
  std::mutex mutex;

  for (std::uint32_t n = options.n_min; n <= options.n_max; ++n) {
    std::vector<PermTuple> connected;
    for (PermTuple& t : enumerate_solutions(system, n, options.caps)) {
      if (is_connected(SGraph(t))) connected.push_back(std::move(t));
    }
    std::vector<PermTuple> smaller = enumerate_solutions(system, n - 1, options.caps);
    std::vector<std::uint64_t> counts(connected.size(), 0);

    parallel_for(connected.size(), options.jobs, [&](std::size_t gi) {
      SGraph g(connected[gi]);
      SGraph restricted = restrict_last(g);
      std::vector<std::uint64_t> res_moves(labels, 0);
      for (std::size_t s = 0; s < labels; ++s) {
        for (Point x = 1; x < n; ++x) res_moves[s] += restricted.tuple()[s](x) != g.tuple()[s](x);
        if (res_moves[s] > 1) {
          std::lock_guard<std::mutex> lock(mutex);
          report.fail("res_n moves " + std::to_string(res_moves[s]) + " points for label " + std::to_string(s + 1) +
                      " on G=" + describe(g.tuple()));
        }
      }
      std::uint64_t res_total = 0;
      for (std::uint64_t m : res_moves) res_total += m;

      for (const PermTuple& gp_tuple : smaller) {
        SGraph gp(gp_tuple);
        ++counts[gi];
        SGraph product = product_graph(gp, g);
        std::vector<bool> in_d(product.n(), false);
        for (Point x = 1; x < n; ++x) in_d[(x - 1) * n + x - 1] = true;

        std::uint64_t boundary = edge_boundary(product, in_d);
        std::uint64_t direct = 0;
        for (std::size_t s = 0; s < labels; ++s) {
          for (Point x = 1; x < n; ++x) direct += gp.tuple()[s](x) != g.tuple()[s](x);
        }
        auto fail = [&](const std::string& what) {
          std::lock_guard<std::mutex> lock(mutex);
          report.fail(what + " for G=" + describe(g.tuple()) + ", G'=" + describe(gp.tuple()));
        };
        if (boundary != direct) fail("boundary of D disagrees with the label-disagreement count");

        Rational lower = 0;
        for (const auto& comp : components(product)) {
          std::size_t in_comp = 0;
          for (Point v : comp) in_comp += in_d[v - 1];
          if (in_comp == 0) continue;
          if (2 * in_comp > comp.size()) {
            fail("component of size " + std::to_string(comp.size()) + " holds " + std::to_string(in_comp) +
                 " diagonal points");
            continue;
          }
          SGraph piece = induced_subgraph(product, comp);
          lower += cache.get(piece, options.caps) * static_cast<unsigned long>(in_comp);
        }
        if (Rational(static_cast<unsigned long>(boundary)) < lower) {
          fail("boundary " + std::to_string(boundary) + " below the Cheeger sum " + to_fraction_string(lower));
        }
        Rational dist = tuple_distance(restricted.tuple(), gp.tuple());
        Rational upper = Rational(static_cast<unsigned long>(labels)) * (Rational(n - 1) * dist + 1);
        Rational tight = Rational(n - 1) * dist + Rational(static_cast<unsigned long>(res_total));
        if (Rational(static_cast<unsigned long>(boundary)) > upper) {
          fail("boundary " + std::to_string(boundary) + " above |S|((n-1)d+1) = " + to_fraction_string(upper));
        }
        if (Rational(static_cast<unsigned long>(boundary)) > tight) {
          fail("boundary " + std::to_string(boundary) + " above the per-label bound " + to_fraction_string(tight));
        }
      }
    });
    std::uint64_t pairs = 0;
    for (std::uint64_t c : counts) pairs += c;
    report.instances += pairs;
    report.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(connected.size()) + " connected G, " +
                           std::to_string(smaller.size()) + " G', " + std::to_string(pairs) + " pairs");
  }
  report.notes.push_back(std::to_string(cache.size()) + " Cheeger constants computed, " +
                         std::to_string(cache.hits()) + " cache hits");
  return report;
}

SuiteReport census_suite(const std::vector<DeterministicMachine>& machines, const CensusOptions& options) {
  SuiteReport report;
  report.name = "census";
  for (const DeterministicMachine& m : machines) {
    for (std::uint32_t n = 1; n <= options.n_max; ++n) {
      CensusResult r = transcript_census(m, options.d, n, options.caps);
      ++report.instances;
      std::string counts;
      for (const CensusBucket& b : r.buckets) {
        counts += " r=" + std::to_string(b.rank) + ":" + std::to_string(b.transcripts) + "/" + std::to_string(b.bound);
        if (b.transcripts > b.bound) {
          report.fail(m.name + " n=" + std::to_string(n) + " r=" + std::to_string(b.rank) + ": " +
                      std::to_string(b.transcripts) + " transcripts exceed the bound " + std::to_string(b.bound));
        }
      }
      if (!r.verdicts_consistent) report.fail(m.name + " n=" + std::to_string(n) + ": equal transcripts, different verdicts");
      report.notes.push_back(m.name + " (q=" + std::to_string(m.max_queries) + ") n=" + std::to_string(n) + ":" + counts);
    }
  }
  return report;
}

TransferFixture z2_fixture(bool swapped) {
  EquationSystem xy = parse_system("letters X Y\nX Y = Y X\n");
  EquationSystem abc = parse_system("letters a b c\na b = b a\nc = a b\n");
  const auto& xy_names = xy.letter_names();
  const auto& abc_names = abc.letter_names();
  PresentationMap to_abc(xy_names, abc_names, {parse_word("a", abc_names), parse_word("b", abc_names)});
  PresentationMap to_xy(abc_names, xy_names,
                        {parse_word("X", xy_names), parse_word("Y", xy_names), parse_word("X Y", xy_names)});
  TransferFixture f;
  if (!swapped) {
    f.name = "z2:XY->abc";
    f.source = xy;
    f.target = abc;
    f.lambda1 = to_abc;
    f.lambda2 = to_xy;
    f.correction.factors.resize(2);
  } else {
    f.name = "z2:abc->XY";
    f.source = abc;
    f.target = xy;
    f.lambda1 = to_xy;
    f.lambda2 = to_abc;
    f.correction.factors.resize(3);
    f.correction.factors[2].push_back(
        {parse_word("c^-1", abc_names), parse_word("c b^-1 a^-1", abc_names), -1});
  }
  return f;
}

SuiteReport transfer_suite(const TransferFixture& fx, const TransferOptions& options) {
  SuiteReport report;
  report.name = "transfer " + fx.name;
  std::string problem = validate_correction(fx.correction, fx.lambda1, fx.lambda2, fx.source);
  ++report.instances;
  if (!problem.empty()) {
    report.fail("correction data rejected: " + problem);
    return report;
  }
  const std::size_t ds = fx.source.d();
  const std::size_t dt = fx.target.d();

  auto check = [&](const BoundCheck& b, const std::string& what) {
    ++report.instances;
    if (!b.holds()) {
      report.fail(what + ": " + to_fraction_string(b.lhs) + " > " + to_fraction_string(b.rhs));
    }
  };

  for (std::uint32_t n = 1; n <= options.exhaustive_n_max; ++n) {
    Rng rng = make_rng(derive_seed(options.seed, n));
    for_each_tuple(n, ds, options.caps, [&](const PermTuple& f) {
      check(check_pseudo_inverse_bound(f, fx.lambda1, fx.lambda2, fx.correction, fx.source),
            "pseudo-inverse bound at " + describe(f));
      PermTuple h = random_tuple(n, dt, rng);
      check(check_two_sided_bound(f, h, fx.lambda1, fx.lambda2, fx.correction, fx.source),
            "two-sided bound at " + describe(f));
      check(check_two_sided_bound(f, pullback(fx.lambda2, f), fx.lambda1, fx.lambda2, fx.correction, fx.source),
            "two-sided bound at h = lambda2^* f, f = " + describe(f));
      check(check_lipschitz_bound(f, random_tuple(n, ds, rng), fx.lambda2), "Lipschitz bound for lambda2 at " + describe(f));
      return true;
    });
    for_each_tuple(n, dt, options.caps, [&](const PermTuple& h) {
      check(check_lipschitz_bound(h, random_tuple(n, dt, rng), fx.lambda1), "Lipschitz bound for lambda1 at " + describe(h));
      return true;
    });
    TransportCheck forward = check_solution_transport(fx.lambda2, fx.source, fx.target, n, options.caps);
    TransportCheck backward = check_solution_transport(fx.lambda1, fx.target, fx.source, n, options.caps);
    report.instances += forward.checked + backward.checked;
    if (!forward.holds) report.fail("lambda2^* leaves SOL at " + describe(*forward.counterexample));
    if (!backward.holds) report.fail("lambda1^* leaves SOL at " + describe(*backward.counterexample));
    for (const PermTuple& f : enumerate_solutions(fx.source, n, options.caps)) {
      ++report.instances;
      if (pullback(fx.lambda1, pullback(fx.lambda2, f)) != f) {
        report.fail("lambda1^* lambda2^* is not the identity at " + describe(f));
      }
    }
  }

  Rng rng = make_rng(derive_seed(options.seed, 0xfeed));
  std::uniform_int_distribution<std::uint32_t> pick_n(1, options.random_n_max);
  for (std::size_t i = 0; i < options.random_count; ++i) {
    std::uint32_t n = pick_n(rng);
    PermTuple f = random_tuple(n, ds, rng);
    PermTuple h = random_tuple(n, dt, rng);
    PermTuple h2 = random_tuple(n, dt, rng);
    check(check_pseudo_inverse_bound(f, fx.lambda1, fx.lambda2, fx.correction, fx.source),
          "pseudo-inverse bound at " + describe(f));
    check(check_lipschitz_bound(h, h2, fx.lambda1), "Lipschitz bound at " + describe(h));
    check(check_two_sided_bound(f, h, fx.lambda1, fx.lambda2, fx.correction, fx.source),
          "two-sided bound at " + describe(f));
  }
  report.notes.push_back("C1 = " + std::to_string(fx.lambda1.lipschitz_constant()) +
                         ", C2 = " + std::to_string(fx.correction.total_conjugators()));
  return report;
}

Rational sas_single_round_by_enumeration(const PermTuple& t, const EquationSystem& system) {
  if (system.r() == 0 || t.n() == 0) return Rational(0);
  std::int64_t rejecting = 0;
  for (const Equation& eq : system.equations()) {
    for (Point x = 1; x <= t.n(); ++x) {
      OracleTuple oracle(t, false);
      rejecting += oracle.walk(eq.lhs, x) != oracle.walk(eq.rhs, x);
    }
  }
  return make_rational(rejecting, static_cast<std::int64_t>(system.r()) * t.n());
}

SuiteReport sas_defect_suite(const std::vector<EquationSystem>& systems, const SasDefectOptions& options) {
  SuiteReport report;
  report.name = "sas-defect";
  auto check = [&](const PermTuple& t, const EquationSystem& e) {
    ++report.instances;
    Rational by_samples = sas_single_round_by_enumeration(t, e);
    Rational by_defect = local_defect(t, e) / static_cast<unsigned long>(e.r());
    Rational closed = sas_reject_probability_exact(t, e, 1);
    if (by_samples != by_defect || closed != by_defect) {
      report.fail("t=" + describe(t) + ": samples " + to_fraction_string(by_samples) + ", L/r " +
                  to_fraction_string(by_defect) + ", closed form " + to_fraction_string(closed));
    }
  };
  for (const EquationSystem& e : systems) {
    if (e.r() == 0) throw ValidationError("the sas-defect suite needs at least one equation");
    for (std::uint32_t n = 1; n <= options.exhaustive_n_max; ++n) {
      for_each_tuple(n, e.d(), options.caps, [&](const PermTuple& t) {
        check(t, e);
        return true;
      });
    }
    Rng rng = make_rng(derive_seed(options.seed, e.r()));
    for (std::size_t i = 0; i < options.random_count; ++i) check(random_tuple(options.random_n, e.d(), rng), e);
  }
  return report;
}

SuiteReport inverseless_suite(const EquationSystem& system, const InverselessOptions& options) {
  SuiteReport report;
  report.name = "inverseless";
  EquationSystem bar = to_inverseless(system);
  ++report.instances;
  if (!is_inverseless(bar)) report.fail("converted system still contains inverse letters");
  for (std::uint32_t n = 1; n <= options.n_max; ++n) {
    std::vector<PermTuple> expected;
    for (const PermTuple& s : enumerate_solutions(system, n, options.caps)) {
      std::vector<Permutation> perms = s.perms();
      for (const Permutation& p : s.perms()) perms.push_back(p.inverse());
      expected.emplace_back(std::move(perms), n);
    }
    std::sort(expected.begin(), expected.end());
    std::vector<PermTuple> actual = enumerate_solutions(bar, n, options.caps);
    ++report.instances;
    if (actual != expected) {
      report.fail("n=" + std::to_string(n) + ": " + std::to_string(actual.size()) + " solutions, expected " +
                  std::to_string(expected.size()));
    }
  }
  Rng rng = make_rng(options.seed);
  std::uniform_int_distribution<std::uint32_t> pick_n(1, std::max<std::uint32_t>(1, options.n_max));
  for (std::size_t i = 0; i < options.sas_runs; ++i) {
    PermTuple t = random_tuple(pick_n(rng), bar.d(), rng);
    Verdict v = sas(t, bar, options.k, derive_seed(options.seed, i));
    ++report.instances;
    if (v.inverse_queries != 0) report.fail("sas issued " + std::to_string(v.inverse_queries) + " inverse queries");
  }
  return report;
}

}  // namespace permtest::verify
