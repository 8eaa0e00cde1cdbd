#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "permtest/dsl.hpp"
#include "permtest/errors.hpp"
#include "permtest/io.hpp"
#include "permtest/local_stats.hpp"
#include "permtest/metrics.hpp"
#include "permtest/presets.hpp"
#include "permtest/rng.hpp"
#include "permtest/sgraph.hpp"
#include "permtest/solutions.hpp"
#include "permtest/statistics.hpp"
#include "permtest/testers.hpp"
#include "permtest/transfer.hpp"
#include "permtest/verify.hpp"

namespace permtest::cli {

namespace {

using io::Json;

struct Globals {
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::uint64_t cap_states = Caps{}.states;
  std::uint64_t cap_subsets = Caps{}.subsets;
  std::string out;
  std::string emit_graph;

  Caps caps() const {
    Caps c;
    c.states = cap_states;
    c.subsets = cap_subsets;
    return c;
  }
};

struct SystemArgs {
  std::string preset;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* p = cmd->add_option("--preset", preset, "Preset system, e.g. comm:2, bs:2,3, sl:3");
    auto* f = cmd->add_option("--system", file, "Equation system file in the letters/equations syntax");
    p->excludes(f);
  }
  EquationSystem load() const {
    if (!preset.empty()) return presets::from_spec(preset);
    if (!file.empty()) return load_system(file);
    throw ValidationError("give a system with --preset or --system");
  }
};

struct WordArgs {
  std::size_t radius = 2;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* b = cmd->add_option("--ball", radius, "Use P = B_R together with the relators (default R = 2)");
    auto* w = cmd->add_option("--words", file, "Read P from a file, one word per line");
    b->excludes(w);
  }
  WordSet make(const EquationSystem& e, const Caps& caps) const {
    if (!file.empty()) return io::load_word_list(file, e.letter_names());
    WordSet p = ball(static_cast<std::uint32_t>(e.d()), radius, caps);
    p.merge(relators(e));
    return p;
  }
};

void emit(const Globals& g, std::ostream& out, const std::string& content) {
  if (g.out.empty()) {
    out << content;
    return;
  }
  std::ofstream file(g.out);
  if (!file) throw ValidationError("cannot write '" + g.out + "'");
  file << content;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path);
  if (!file) throw ValidationError("cannot write '" + path + "'");
  file << content;
}

std::string transcript_edges(const PartialSGraph& h, const std::vector<std::string>& names) {
  std::string out;
  for (const LabelledEdge& e : h.edges()) {
    out += std::to_string(e.source) + " " + names[e.label - 1] + " " + std::to_string(e.target) + "\n";
  }
  return out;
}

Json rational_json(const Rational& q) {
  return Json{{"exact", to_fraction_string(q)}, {"decimal", to_decimal_string(q)}};
}

Json with_meta(Json report, const Globals& g) {
  report["seed"] = g.seed;
  report["caps"] = Json{{"states", g.cap_states}, {"subsets", g.cap_subsets}};
  return report;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw ValidationError("empty list of rationals");
  return out;
}

// ---------------------------------------------------------------- test
struct TestCmd {
  SystemArgs system;
  WordArgs words;
  std::string tuple;
  std::string tester = "sas";
  std::uint64_t k = 0;
  std::string delta;
  std::uint64_t trials = 1;
  bool aggregate = false;
};

int run_test(const TestCmd& c, const Globals& g, std::ostream& out) {
  EquationSystem e = c.system.load();
  PermTuple t = io::load_tuple(c.tuple);
  check_shape(e, t);
  std::string lines;
  bool all_accepted = true;
  PartialSGraph last_transcript;

  if (c.tester == "sas") {
    std::uint64_t k = c.k == 0 ? 1 : c.k;
    for (std::uint64_t i = 0; i < c.trials; ++i) {
      std::uint64_t seed = c.trials == 1 ? g.seed : derive_seed(g.seed, i);
      Verdict v = sas(t, e, k, seed);
      all_accepted = all_accepted && v.accepted;
      last_transcript = v.transcript;
      lines += io::verdict_report("sas", with_meta(Json{{"k", k}, {"n", t.n()}, {"equations", e.r()}}, g), v, e.letter_names()).dump() + "\n";
    }
  } else if (c.tester == "lsm") {
    if (c.delta.empty()) throw ValidationError("lsm needs --delta");
    Rational delta = parse_rational(c.delta);
    WordSet p = c.words.make(e, g.caps());
    std::uint64_t k = c.k != 0 ? c.k : lsm_params(p.size(), delta * 2);
    auto ctx = make_lsm_context(e, t.n(), p, g.caps());
    for (std::uint64_t i = 0; i < c.trials; ++i) {
      std::uint64_t seed = c.trials == 1 ? g.seed : derive_seed(g.seed, i);
      Verdict v = c.aggregate ? lsm_aggregated(t, *ctx, k, delta, seed) : lsm(t, *ctx, k, delta, seed);
      all_accepted = all_accepted && v.accepted;
      last_transcript = v.transcript;
      Json params{{"k", k},
                  {"delta", to_fraction_string(delta)},
                  {"words", p.size()},
                  {"n", t.n()},
                  {"aggregated", c.aggregate}};
      params = with_meta(params, g);
      lines += io::verdict_report("lsm", params, v, e.letter_names()).dump() + "\n";
    }
  } else {
    throw ValidationError("unknown tester '" + c.tester + "' (use sas or lsm)");
  }
  emit(g, out, lines);
  if (!g.emit_graph.empty()) write_file(g.emit_graph, transcript_edges(last_transcript, e.letter_names()));
  return all_accepted ? kOk : kReject;
}

// ---------------------------------------------------------------- distance
struct DistanceCmd {
  SystemArgs system;
  std::string tuple;
  bool flexible = false;
  std::uint32_t max_m = 0;
};

int run_distance(const DistanceCmd& c, const Globals& g, std::ostream& out) {
  EquationSystem e = c.system.load();
  PermTuple t = io::load_tuple(c.tuple);
  check_shape(e, t);
  Json report{{"n", t.n()}};
  std::string text;
  auto nearest = nearest_solution(t, e, g.caps());
  if (nearest) {
    report["distance"] = rational_json(nearest->distance);
    report["witness"] = io::tuple_to_json(nearest->witness);
    text += "distance: " + to_display_string(nearest->distance) + "\n";
    text += "witness: " + nearest->witness.to_string() + "\n";
  } else {
    report["distance"] = nullptr;
    text += "distance: no solutions of size " + std::to_string(t.n()) + "\n";
  }
  if (c.flexible) {
    std::uint32_t max_m = c.max_m == 0 ? 2 * t.n() : c.max_m;
    auto flex = flexible_nearest_solution(t, e, max_m, g.caps());
    if (flex) {
      report["flexible"] = Json{{"distance", rational_json(flex->distance)},
                                {"m", flex->m},
                                {"witness", io::tuple_to_json(flex->witness)},
                                {"searched_sizes", flex->searched_sizes},
                                {"window", max_m}};
      text += "flexible distance (m <= " + std::to_string(max_m) + "): " + to_display_string(flex->distance) +
              " at m = " + std::to_string(flex->m) + "\n";
    }
  }
  if (!g.out.empty()) {
    write_file(g.out, with_meta(report, g).dump(2) + "\n");
    out << text;
  } else {
    out << text;
  }
  return kOk;
}

// ---------------------------------------------------------------- defect
struct DefectCmd {
  SystemArgs system;
  std::string tuple;
};

int run_defect(const DefectCmd& c, const Globals& g, std::ostream& out) {
  EquationSystem e = c.system.load();
  PermTuple t = io::load_tuple(c.tuple);
  check_shape(e, t);
  Rational defect = local_defect(t, e);
  std::vector<Point> bad = bad_set(t, e);
  Json per_equation = Json::array();
  std::string text = "local defect: " + to_display_string(defect) + "\n";
  for (const Equation& eq : e.equations()) {
    EquationSystem single(e.letter_names(), {eq});
    Rational d = local_defect(t, single);
    std::string label = render_word(eq.lhs, e.letter_names()) + " = " + render_word(eq.rhs, e.letter_names());
    per_equation.push_back(Json{{"equation", label}, {"defect", rational_json(d)}});
    text += "  " + label + ": " + to_display_string(d) + "\n";
  }
  Rational reject = sas_reject_probability_exact(t, e, 1);
  text += "single-round sas rejection probability: " + to_display_string(reject) + "\n";
  text += "bad points: " + std::to_string(bad.size()) + " of " + std::to_string(t.n()) + "\n";
  text += std::string("solution: ") + (bad.empty() ? "yes" : "no") + "\n";
  Json report{{"defect", rational_json(defect)},
              {"equations", per_equation},
              {"sas_reject_k1", rational_json(reject)},
              {"bad_set", bad},
              {"solution", bad.empty()}};
  if (!g.out.empty()) write_file(g.out, with_meta(report, g).dump(2) + "\n");
  out << text;
  return kOk;
}

// ---------------------------------------------------------------- cheeger
struct CheegerCmd {
  std::string tuple;
  std::vector<std::string> labels;
};

int run_cheeger(const CheegerCmd& c, const Globals& g, std::ostream& out) {
  PermTuple t = io::load_tuple(c.tuple);
  SGraph graph(t);
  std::vector<std::string> names = c.labels;
  if (names.empty()) {
    for (std::size_t i = 1; i <= t.d(); ++i) names.push_back("s" + std::to_string(i));
  }
  if (names.size() != t.d()) throw ValidationError("--labels must name every permutation");
  Rational alpha = cheeger(graph, g.caps());
  auto comps = components(graph);
  std::string text = "vertices: " + std::to_string(t.n()) + ", components: " + std::to_string(comps.size()) + "\n";
  text += "cheeger constant: " + to_display_string(alpha) + "\n";
  if (!g.out.empty()) {
    write_file(g.out, with_meta(Json{{"n", t.n()}, {"components", comps.size()}, {"cheeger", rational_json(alpha)}}, g).dump(2) + "\n");
  }
  if (!g.emit_graph.empty()) write_file(g.emit_graph, edge_list(graph, names));
  out << text;
  return kOk;
}

// ---------------------------------------------------------------- distinguish
struct DistinguishCmd {
  SystemArgs system;
  WordArgs words;
  std::uint32_t n = 3;
  std::string epsilon = "1/2";
};

int run_distinguish(const DistinguishCmd& c, const Globals& g, std::ostream& out) {
  EquationSystem e = c.system.load();
  WordSet p = c.words.make(e, g.caps());
  Rational eps = parse_rational(c.epsilon);
  Distinguishability d = distinguishability(e, c.n, p, eps, g.caps());
  Json report{{"n", c.n},
              {"epsilon", to_fraction_string(eps)},
              {"words", p.size()},
              {"solutions", d.solutions},
              {"far_tuples", d.far_tuples},
              {"distinct_solution_views", d.distinct_solution_views},
              {"distinct_far_views", d.distinct_far_views}};
  std::string text = "solutions: " + std::to_string(d.solutions) + ", eps-far tuples: " + std::to_string(d.far_tuples) + "\n";
  if (d.delta) {
    report["delta"] = rational_json(*d.delta);
    text += "delta*: " + to_display_string(*d.delta) + "\n";
    if (*d.delta > 0) {
      std::uint64_t k = lsm_params(p.size(), *d.delta);
      report["k"] = k;
      text += "lsm sample count for delta*: " + std::to_string(k) + "\n";
    }
  } else {
    report["delta"] = nullptr;
    text += "delta*: undefined (no eps-far tuples)\n";
  }
  if (!g.out.empty()) write_file(g.out, with_meta(report, g).dump(2) + "\n");
  out << text;
  return kOk;
}

// ---------------------------------------------------------------- sweep
struct SweepCmd {
  SystemArgs system;
  WordArgs words;
  std::string kind = "distinguish";
  std::uint32_t n_min = 2;
  std::uint32_t n_max = 4;
  std::string epsilons = "1/3,2/3";
  std::vector<std::uint64_t> k_values{1, 4, 16};
  std::size_t tuples = 3;
  std::uint64_t trials = 200;
};

int run_sweep(const SweepCmd& c, const Globals& g, std::ostream& out) {
  EquationSystem e = c.system.load();
  std::string csv;
  if (c.kind == "distinguish") {
    WordSet p = c.words.make(e, g.caps());
    std::vector<Rational> eps_list = parse_rational_list(c.epsilons);
    csv = "n,epsilon,words,solutions,far_tuples,delta,delta_decimal,k\n";
    for (std::uint32_t n = c.n_min; n <= c.n_max; ++n) {
      for (const Rational& eps : eps_list) {
        Distinguishability d = distinguishability(e, n, p, eps, g.caps());
        std::string delta = d.delta ? to_fraction_string(*d.delta) : "";
        std::string decimal = d.delta ? to_decimal_string(*d.delta) : "";
        std::string k = d.delta && *d.delta > 0 ? std::to_string(lsm_params(p.size(), *d.delta)) : "";
        csv += std::to_string(n) + "," + csv_escape(to_fraction_string(eps)) + "," + std::to_string(p.size()) + "," +
               std::to_string(d.solutions) + "," + std::to_string(d.far_tuples) + "," + delta + "," + decimal + "," +
               k + "\n";
      }
    }
  } else if (c.kind == "sas-error") {
    csv = "n,tuple,k,defect,exact_reject,empirical_reject,ci_low,ci_high\n";
    for (std::uint32_t n = c.n_min; n <= c.n_max; ++n) {
      Rng rng = make_rng(derive_seed(g.seed, n));
      for (std::size_t ti = 0; ti < c.tuples; ++ti) {
        PermTuple t = random_tuple(n, e.d(), rng);
        for (std::uint64_t k : c.k_values) {
          Rational exact = sas_reject_probability_exact(t, e, k);
          RateEstimate est = empirical_rate(
              [&](std::uint64_t seed) { return !sas(t, e, k, seed).accepted; }, c.trials,
              derive_seed(g.seed, (static_cast<std::uint64_t>(n) << 32) ^ (ti << 16) ^ k));
          std::ostringstream row;
          row.precision(12);
          row << n << "," << ti << "," << k << "," << to_fraction_string(local_defect(t, e)) << ","
              << to_decimal_string(exact) << "," << est.rate << "," << est.low << "," << est.high << "\n";
          csv += row.str();
        }
      }
    }
  } else {
    throw ValidationError("unknown sweep kind '" + c.kind + "' (use distinguish or sas-error)");
  }
  emit(g, out, csv);
  return kOk;
}

// ---------------------------------------------------------------- verify
struct VerifyCmd {
  std::string suite;
  SystemArgs system;
  std::uint32_t n_min = 0;
  std::uint32_t n_max = 0;
  std::size_t samples = 0;
};

int run_verify(const VerifyCmd& c, const Globals& g, std::ostream& out) {
  verify::SuiteReport report;
  auto system_or = [&](const std::string& fallback) {
    if (!c.system.preset.empty() || !c.system.file.empty()) return c.system.load();
    return presets::from_spec(fallback);
  };
  if (c.suite == "inclusion") {
    verify::InclusionOptions o;
    o.seed = g.seed;
    o.jobs = g.jobs;
    o.caps = g.caps();
    if (c.n_min) o.n_min = c.n_min;
    if (c.n_max) o.n_max = c.n_max;
    if (c.samples) o.graphs_per_n = c.samples;
    report = verify::inclusion_suite(o);
  } else if (c.suite == "diagonal") {
    verify::DiagonalOptions o;
    o.jobs = g.jobs;
    o.caps = g.caps();
    if (c.n_min) o.n_min = c.n_min;
    o.n_max = c.n_max ? c.n_max : 5;
    report = verify::diagonal_suite(system_or("comm:2"), o);
  } else if (c.suite == "census") {
    verify::CensusOptions o;
    o.caps = g.caps();
    if (c.n_max) o.n_max = c.n_max;
    report = verify::census_suite(sample_machines(), o);
  } else if (c.suite == "transfer") {
    verify::TransferOptions o;
    o.seed = g.seed;
    o.caps = g.caps();
    if (c.n_max) o.exhaustive_n_max = c.n_max;
    if (c.samples) o.random_count = c.samples;
    for (bool swapped : {false, true}) {
      verify::SuiteReport part = verify::transfer_suite(verify::z2_fixture(swapped), o);
      report.name = "transfer";
      report.instances += part.instances;
      for (std::uint64_t i = 0; i < part.failures; ++i) report.fail(part.first_failure);
      for (auto& note : part.notes) report.notes.push_back(part.name + ": " + note);
    }
  } else if (c.suite == "sas-defect") {
    verify::SasDefectOptions o;
    o.seed = g.seed;
    o.caps = g.caps();
    if (c.n_max) o.exhaustive_n_max = c.n_max;
    if (c.samples) o.random_count = c.samples;
    std::vector<EquationSystem> systems;
    if (!c.system.preset.empty() || !c.system.file.empty()) {
      systems.push_back(c.system.load());
    } else {
      systems = {presets::comm(2), presets::baumslag_solitar(2, 3)};
    }
    report = verify::sas_defect_suite(systems, o);
  } else if (c.suite == "inverseless") {
    verify::InverselessOptions o;
    o.seed = g.seed;
    o.caps = g.caps();
    if (c.n_max) o.n_max = c.n_max;
    report = verify::inverseless_suite(system_or("comm:2"), o);
  } else {
    throw ValidationError("unknown suite '" + c.suite +
                          "' (choose inclusion, diagonal, census, transfer, sas-defect or inverseless)");
  }
  std::string text = report.name + ": " + (report.passed() ? "PASS" : "FAIL") + " (" +
                     std::to_string(report.instances) + " checks, " + std::to_string(report.failures) + " failures)\n";
  for (const auto& note : report.notes) text += "  " + note + "\n";
  if (!report.first_failure.empty()) text += "  first failure: " + report.first_failure + "\n";
  if (!g.out.empty()) {
    write_file(g.out, with_meta(Json{{"suite", report.name},
                           {"passed", report.passed()},
                           {"instances", report.instances},
                           {"failures", report.failures},
                           {"first_failure", report.first_failure},
                           {"notes", report.notes}}, g)
                              .dump(2) +
                          "\n");
  }
  out << text;
  return report.passed() ? kOk : kReject;
}

// ---------------------------------------------------------------- transfer-check
struct TransferCmd {
  std::string fixture;
  std::string source, target, lambda1, lambda2, corrections;
  std::uint32_t n_max = 4;
  std::size_t samples = 1000;
  std::uint32_t random_n_max = 8;
};

int run_transfer(const TransferCmd& c, const Globals& g, std::ostream& out) {
  verify::TransferFixture fx;
  if (!c.fixture.empty()) {
    if (c.fixture == "z2") {
      fx = verify::z2_fixture(false);
    } else if (c.fixture == "z2-swapped") {
      fx = verify::z2_fixture(true);
    } else {
      throw ValidationError("unknown fixture '" + c.fixture + "' (use z2 or z2-swapped)");
    }
  } else {
    if (c.source.empty() || c.target.empty() || c.lambda1.empty() || c.lambda2.empty() || c.corrections.empty()) {
      throw ValidationError("give --fixture or all of --source, --target, --lambda1, --lambda2, --corrections");
    }
    fx.name = c.source + " <-> " + c.target;
    fx.source = load_system(c.source);
    fx.target = load_system(c.target);
    fx.lambda1 = io::load_map(c.lambda1);
    fx.lambda2 = io::load_map(c.lambda2);
    fx.correction = io::load_correction(c.corrections, fx.source.letter_names());
    if (fx.lambda1.source_letters() != fx.source.letter_names() ||
        fx.lambda1.target_letters() != fx.target.letter_names() ||
        fx.lambda2.source_letters() != fx.target.letter_names() ||
        fx.lambda2.target_letters() != fx.source.letter_names()) {
      throw ValidationError("map alphabets do not match the two systems");
    }
  }
  verify::TransferOptions o;
  o.exhaustive_n_max = c.n_max;
  o.random_count = c.samples;
  o.random_n_max = c.random_n_max;
  o.seed = g.seed;
  o.caps = g.caps();
  verify::SuiteReport report = verify::transfer_suite(fx, o);
  out << report.name << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.instances << " checks, "
      << report.failures << " failures)\n";
  for (const auto& note : report.notes) out << "  " << note << "\n";
  if (!report.first_failure.empty()) out << "  first failure: " << report.first_failure << "\n";
  return report.passed() ? kOk : kReject;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Property testers for permutation equations", "permtest"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Master random seed")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads for verification suites")->capture_default_str();
  app.add_option("--cap-states", g.cap_states, "Cap on enumerated tuples or permutations")->capture_default_str();
  app.add_option("--cap-subsets", g.cap_subsets, "Cap on subsets scanned by the Cheeger computation")
      ->capture_default_str();
  app.add_option("--out", g.out, "Write the machine-readable result to this file");
  app.add_option("--emit-graph", g.emit_graph, "Write a graph or transcript edge list to this file");

  TestCmd test;
  auto* test_cmd = app.add_subcommand("test", "Run a tester on a tuple");
  test.system.attach(test_cmd);
  test.words.attach(test_cmd);
  test_cmd->add_option("--tuple", test.tuple, "Tuple JSON file")->required();
  test_cmd->add_option("--tester", test.tester, "sas or lsm")->capture_default_str();
  test_cmd->add_option("-k", test.k, "Rounds (sas) or sampled points (lsm)");
  test_cmd->add_option("--delta", test.delta, "LSM acceptance radius in total variation");
  test_cmd->add_option("--trials", test.trials, "Independent runs, reported as JSON lines")->capture_default_str();
  test_cmd->add_flag("--aggregate", test.aggregate, "LSM: draw point multiplicities at once (large k)");

  DistanceCmd distance;
  auto* distance_cmd = app.add_subcommand("distance", "Distance from a tuple to the solution set");
  distance.system.attach(distance_cmd);
  distance_cmd->add_option("--tuple", distance.tuple, "Tuple JSON file")->required();
  distance_cmd->add_flag("--flexible", distance.flexible, "Also search solutions of other sizes");
  distance_cmd->add_option("--max-m", distance.max_m, "Largest size in the flexible search (default 2n)");

  DefectCmd defect;
  auto* defect_cmd = app.add_subcommand("defect", "Local defect and single-round rejection probability");
  defect.system.attach(defect_cmd);
  defect_cmd->add_option("--tuple", defect.tuple, "Tuple JSON file")->required();

  CheegerCmd cheeger_args;
  auto* cheeger_cmd = app.add_subcommand("cheeger", "Exact Cheeger constant of the S-graph of a tuple");
  cheeger_cmd->add_option("--tuple", cheeger_args.tuple, "Tuple JSON file")->required();
  cheeger_cmd->add_option("--labels", cheeger_args.labels, "Label names for --emit-graph");

  DistinguishCmd distinguish;
  auto* distinguish_cmd = app.add_subcommand("distinguish", "Exhaustive statistical distinguishability");
  distinguish.system.attach(distinguish_cmd);
  distinguish.words.attach(distinguish_cmd);
  distinguish_cmd->add_option("-n", distinguish.n, "Number of points")->required();
  distinguish_cmd->add_option("--epsilon", distinguish.epsilon, "Farness threshold")->capture_default_str();

  SweepCmd sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV grid of distinguishability or sas error rates");
  sweep.system.attach(sweep_cmd);
  sweep.words.attach(sweep_cmd);
  sweep_cmd->add_option("--kind", sweep.kind, "distinguish or sas-error")->capture_default_str();
  sweep_cmd->add_option("--n-min", sweep.n_min)->capture_default_str();
  sweep_cmd->add_option("--n-max", sweep.n_max)->capture_default_str();
  sweep_cmd->add_option("--epsilons", sweep.epsilons, "Comma-separated thresholds")->capture_default_str();
  sweep_cmd->add_option("--k-values", sweep.k_values, "sas round counts")->delimiter(',');
  sweep_cmd->add_option("--tuples", sweep.tuples, "Random tuples per n (sas-error)")->capture_default_str();
  sweep_cmd->add_option("--trials", sweep.trials, "Runs per estimate (sas-error)")->capture_default_str();

  VerifyCmd verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", verify_args.suite,
                         "inclusion, diagonal, census, transfer, sas-defect or inverseless")
      ->required();
  verify_args.system.attach(verify_cmd);
  verify_cmd->add_option("--n-min", verify_args.n_min);
  verify_cmd->add_option("--n-max", verify_args.n_max);
  verify_cmd->add_option("--samples", verify_args.samples, "Random instances where the suite samples");

  std::string preset_spec;
  auto* presets_cmd = app.add_subcommand("presets", "List presets or print one in the system syntax");
  presets_cmd->add_option("spec", preset_spec, "Preset to print, e.g. sl:3");

  SystemArgs convert;
  auto* convert_cmd = app.add_subcommand("convert-inverseless", "Print the equivalent inverseless system");
  convert.attach(convert_cmd);

  TransferCmd transfer;
  auto* transfer_cmd = app.add_subcommand("transfer-check", "Check the transfer inequalities on a presentation pair");
  transfer_cmd->add_option("--fixture", transfer.fixture, "Built-in pair: z2 or z2-swapped");
  transfer_cmd->add_option("--source", transfer.source, "Source system file");
  transfer_cmd->add_option("--target", transfer.target, "Target system file");
  transfer_cmd->add_option("--lambda1", transfer.lambda1, "Map from source to target (JSON)");
  transfer_cmd->add_option("--lambda2", transfer.lambda2, "Map from target to source (JSON)");
  transfer_cmd->add_option("--corrections", transfer.corrections, "Correction data (JSON)");
  transfer_cmd->add_option("--n-max", transfer.n_max, "Exhaustive sizes")->capture_default_str();
  transfer_cmd->add_option("--samples", transfer.samples, "Random tuples")->capture_default_str();
  transfer_cmd->add_option("--random-n-max", transfer.random_n_max, "Largest random size")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (test_cmd->parsed()) return run_test(test, g, out);
    if (distance_cmd->parsed()) return run_distance(distance, g, out);
    if (defect_cmd->parsed()) return run_defect(defect, g, out);
    if (cheeger_cmd->parsed()) return run_cheeger(cheeger_args, g, out);
    if (distinguish_cmd->parsed()) return run_distinguish(distinguish, g, out);
    if (sweep_cmd->parsed()) return run_sweep(sweep, g, out);
    if (verify_cmd->parsed()) return run_verify(verify_args, g, out);
    if (presets_cmd->parsed()) {
      if (preset_spec.empty()) {
        for (const auto& [name, description] : presets::catalogue()) out << name << "\t" << description << "\n";
      } else {
        emit(g, out, render_system(presets::from_spec(preset_spec)));
      }
      return kOk;
    }
    if (convert_cmd->parsed()) {
      emit(g, out, render_system(to_inverseless(convert.load())));
      return kOk;
    }
    if (transfer_cmd->parsed()) return run_transfer(transfer, g, out);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "no command given\n";
  return kUsage;
}

}  // namespace permtest::cli
