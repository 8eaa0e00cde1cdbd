#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permtest/dsl.hpp"
#include "permtest/errors.hpp"
#include "permtest/io.hpp"
#include "permtest/local_stats.hpp"
#include "permtest/metrics.hpp"
#include "permtest/partial_sgraph.hpp"
#include "permtest/presets.hpp"
#include "permtest/sgraph.hpp"
#include "permtest/solutions.hpp"
#include "permtest/testers.hpp"
#include "permtest/transfer.hpp"
#include "permtest/verify.hpp"

namespace py = pybind11;
using namespace permtest;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_fraction_string(q));
}

Rational rational_arg(const py::handle& value) {
  return parse_rational(py::str(value).cast<std::string>());
}

PermTuple make_tuple(const std::vector<std::vector<Point>>& perms, std::uint32_t n) {
  std::vector<Permutation> out;
  for (const auto& images : perms) out.push_back(Permutation::from_images(images));
  if (out.empty()) return PermTuple({}, n);
  return PermTuple(std::move(out));
}

std::vector<std::vector<Point>> images_of(const PermTuple& t) {
  std::vector<std::vector<Point>> out;
  for (const auto& p : t.perms()) out.push_back(p.images());
  return out;
}

WordSet word_set(const EquationSystem& e, const std::vector<std::string>& words) {
  WordSet out;
  for (const auto& w : words) out.insert(parse_word(w, e.letter_names()));
  return out;
}

std::vector<std::string> word_strings(const EquationSystem& e, const WordSet& words) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(render_word(w, e.letter_names()));
  return out;
}

/// P defaults to the radius-2 ball together with the relators.
WordSet probe_words(const EquationSystem& e, const std::optional<std::vector<std::string>>& words, std::size_t radius) {
  if (words) return word_set(e, *words);
  WordSet p = ball(static_cast<std::uint32_t>(e.d()), radius);
  p.merge(relators(e));
  return p;
}

py::dict verdict_dict(const Verdict& v, const EquationSystem& e) {
  py::dict d;
  d["accepted"] = v.accepted;
  d["queries"] = v.queries_used;
  d["inverse_queries"] = v.inverse_queries;
  d["seed"] = v.seed;
  d["rng"] = v.rng;
  py::list edges;
  for (const auto& edge : v.transcript.edges()) {
    edges.append(py::make_tuple(edge.source, e.letter_names()[edge.label - 1], edge.target));
  }
  d["transcript"] = edges;
  return d;
}

py::dict suite_dict(const verify::SuiteReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["passed"] = r.passed();
  d["instances"] = r.instances;
  d["failures"] = r.failures;
  d["first_failure"] = r.first_failure;
  d["notes"] = r.notes;
  return d;
}

PartialSGraph partial_graph(std::uint32_t d, const std::vector<std::tuple<Point, std::uint32_t, Point>>& edges) {
  std::vector<LabelledEdge> out;
  for (const auto& [u, s, v] : edges) out.push_back({u, s, v});
  return PartialSGraph::from_edges(d, out);
}

}  // namespace

PYBIND11_MODULE(_permtest, m) {
  m.doc() = "Exact property testers for systems of permutation equations";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<InfeasibleError>(m, "InfeasibleError", base.ptr());

  py::class_<EquationSystem>(m, "System")
      .def_static("parse", [](const std::string& text) { return parse_system(text); }, py::arg("text"))
      .def_static("preset", [](const std::string& spec) { return presets::from_spec(spec); }, py::arg("spec"))
      .def_static("load", &load_system, py::arg("path"))
      .def_property_readonly("d", &EquationSystem::d)
      .def_property_readonly("r", &EquationSystem::r)
      .def_property_readonly("letters", &EquationSystem::letter_names)
      .def("equations",
           [](const EquationSystem& e) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& eq : e.equations()) {
               out.emplace_back(render_word(eq.lhs, e.letter_names()), render_word(eq.rhs, e.letter_names()));
             }
             return out;
           })
      .def("relators", [](const EquationSystem& e) { return word_strings(e, relators(e)); })
      .def("render", &render_system)
      .def("to_inverseless", &to_inverseless)
      .def("is_inverseless", &is_inverseless)
      .def("ball", [](const EquationSystem& e, std::size_t radius) {
        return word_strings(e, ball(static_cast<std::uint32_t>(e.d()), radius));
      }, py::arg("radius"))
      .def("__eq__", [](const EquationSystem& a, const EquationSystem& b) { return a == b; })
      .def("__repr__", [](const EquationSystem& e) {
        return "<System d=" + std::to_string(e.d()) + " r=" + std::to_string(e.r()) + ">";
      });

  m.def("presets", &presets::catalogue, "Preset families and their descriptions.");

  py::class_<PermTuple>(m, "Tuple")
      .def(py::init(&make_tuple), py::arg("perms"), py::arg("n") = 0,
           "A tuple of permutations, each given by its 1-based image list.")
      .def_static("from_cycles",
                  [](std::uint32_t n, const std::vector<std::vector<std::vector<Point>>>& cycles) {
                    std::vector<Permutation> perms;
                    for (const auto& c : cycles) perms.push_back(Permutation::from_cycles(n, c));
                    return PermTuple(std::move(perms), n);
                  },
                  py::arg("n"), py::arg("cycles"))
      .def_static("from_json", [](const std::string& text) { return io::tuple_from_json(io::Json::parse(text)); })
      .def("to_json", [](const PermTuple& t) { return io::tuple_to_json(t).dump(); })
      .def_property_readonly("n", &PermTuple::n)
      .def_property_readonly("d", &PermTuple::d)
      .def("images", &images_of)
      .def("__eq__", [](const PermTuple& a, const PermTuple& b) { return a == b; })
      .def("__repr__", &PermTuple::to_string);

  m.def("evaluate", [](const EquationSystem& e, const std::string& word, const PermTuple& t) {
    return evaluate(parse_word(word, e.letter_names()), t).images();
  }, py::arg("system"), py::arg("word"), py::arg("tuple"),
        "Images of the word (over the system's letters) evaluated at the tuple.");
  m.def("is_solution", &is_solution, py::arg("tuple"), py::arg("system"));
  m.def("local_defect", [](const PermTuple& t, const EquationSystem& e) { return fraction(local_defect(t, e)); },
        py::arg("tuple"), py::arg("system"));
  m.def("solutions", [](const EquationSystem& e, std::uint32_t n) { return enumerate_solutions(e, n); },
        py::arg("system"), py::arg("n"));
  m.def("nearest_solution", [](const PermTuple& t, const EquationSystem& e) -> py::object {
    auto r = nearest_solution(t, e);
    if (!r) return py::none();
    return py::make_tuple(fraction(r->distance), r->witness);
  }, py::arg("tuple"), py::arg("system"));
  m.def("flexible_nearest_solution", [](const PermTuple& t, const EquationSystem& e, std::uint32_t max_m) -> py::object {
    auto r = flexible_nearest_solution(t, e, max_m);
    if (!r) return py::none();
    return py::make_tuple(fraction(r->distance), r->witness, r->m);
  }, py::arg("tuple"), py::arg("system"), py::arg("max_m"));

  m.def("hamming", [](const std::vector<Point>& a, const std::vector<Point>& b) {
    return fraction(hamming(Permutation::from_images(a), Permutation::from_images(b)));
  });
  m.def("tuple_distance", [](const PermTuple& a, const PermTuple& b) { return fraction(tuple_distance(a, b)); });
  m.def("flexible_distance", [](const std::vector<Point>& a, const std::vector<Point>& b) {
    return fraction(flexible_distance(Permutation::from_images(a), Permutation::from_images(b)));
  });

  m.def("local_distribution", [](const PermTuple& t, const EquationSystem& e, const std::vector<std::string>& words) {
    py::dict out;
    const auto dist = local_distribution(t, word_set(e, words));
    for (const auto& [subset, mass] : dist.support()) {
      out[py::str(subset.to_bitstring())] = fraction(mass);
    }
    return out;
  }, py::arg("tuple"), py::arg("system"), py::arg("words"),
        "Map from fragment bit strings (one bit per word) to exact masses.");
  m.def("local_tv_distance", [](const PermTuple& a, const PermTuple& b, const EquationSystem& e,
                                const std::vector<std::string>& words) {
    WordSet p = word_set(e, words);
    return fraction(tv_distance(local_distribution(a, p), local_distribution(b, p)));
  }, py::arg("a"), py::arg("b"), py::arg("system"), py::arg("words"));

  m.def("cheeger", [](const PermTuple& t) { return fraction(cheeger(SGraph(t))); }, py::arg("tuple"));
  m.def("components", [](const PermTuple& t) { return components(SGraph(t)); }, py::arg("tuple"));

  m.def("sas", [](const PermTuple& t, const EquationSystem& e, std::uint64_t k, std::uint64_t seed) {
    return verdict_dict(sas(t, e, k, seed), e);
  }, py::arg("tuple"), py::arg("system"), py::arg("k"), py::arg("seed") = 1);
  m.def("sas_reject_probability", [](const PermTuple& t, const EquationSystem& e, std::uint64_t k) {
    return fraction(sas_reject_probability_exact(t, e, k));
  }, py::arg("tuple"), py::arg("system"), py::arg("k"));
  m.def("lsm", [](const PermTuple& t, const EquationSystem& e, std::uint64_t k, const py::object& delta,
                  std::uint64_t seed, const std::optional<std::vector<std::string>>& words, std::size_t radius,
                  bool aggregate) {
    auto ctx = make_lsm_context(e, t.n(), probe_words(e, words, radius));
    Rational dl = rational_arg(delta);
    return verdict_dict(aggregate ? lsm_aggregated(t, *ctx, k, dl, seed) : lsm(t, *ctx, k, dl, seed), e);
  }, py::arg("tuple"), py::arg("system"), py::arg("k"), py::arg("delta"), py::arg("seed") = 1,
        py::arg("words") = py::none(), py::arg("radius") = 2, py::arg("aggregate") = false);
  m.def("lsm_params", [](std::size_t word_count, const py::object& delta) {
    return lsm_params(word_count, rational_arg(delta));
  }, py::arg("word_count"), py::arg("delta"));
  m.def("distinguishability", [](const EquationSystem& e, std::uint32_t n, const py::object& epsilon,
                                 const std::optional<std::vector<std::string>>& words, std::size_t radius) {
    WordSet p = probe_words(e, words, radius);
    Distinguishability d = distinguishability(e, n, p, rational_arg(epsilon));
    py::dict out;
    out["delta"] = d.delta ? fraction(*d.delta) : py::none();
    out["solutions"] = d.solutions;
    out["far_tuples"] = d.far_tuples;
    out["words"] = p.size();
    return out;
  }, py::arg("system"), py::arg("n"), py::arg("epsilon"), py::arg("words") = py::none(), py::arg("radius") = 2);

  m.def("inclusion_probability",
        [](const PermTuple& t, const std::vector<std::tuple<Point, std::uint32_t, Point>>& edges,
           std::optional<Point> base, bool exact) {
          PartialSGraph h = partial_graph(static_cast<std::uint32_t>(t.d()), edges);
          SGraph g(t);
          return fraction(exact ? inclusion_probability_exact(g, h) : inclusion_probability(g, h, base));
        },
        py::arg("tuple"), py::arg("edges"), py::arg("base") = py::none(), py::arg("exact") = false,
        "Probability that the partial graph (edges as (u, label, v), labels 1-based) lies in a uniform relabelling.");

  m.def("pullback", [](const std::vector<std::string>& source, const std::vector<std::string>& target,
                       const std::vector<std::string>& images, const PermTuple& t) {
    std::vector<Word> words;
    for (const auto& w : images) words.push_back(parse_word(w, target));
    return pullback(PresentationMap(source, target, words), t);
  }, py::arg("source_letters"), py::arg("target_letters"), py::arg("images"), py::arg("tuple"));

  m.def("verify", [](const std::string& suite, std::uint32_t n_max, std::uint64_t seed) {
    if (suite == "sas-defect") {
      verify::SasDefectOptions o;
      o.seed = seed;
      if (n_max) o.exhaustive_n_max = n_max;
      o.random_count = 1000;
      return suite_dict(verify::sas_defect_suite({presets::comm(2), presets::baumslag_solitar(2, 3)}, o));
    }
    if (suite == "inverseless") {
      verify::InverselessOptions o;
      o.seed = seed;
      if (n_max) o.n_max = n_max;
      return suite_dict(verify::inverseless_suite(presets::comm(2), o));
    }
    if (suite == "census") {
      verify::CensusOptions o;
      if (n_max) o.n_max = n_max;
      return suite_dict(verify::census_suite(sample_machines(), o));
    }
    if (suite == "transfer") {
      verify::TransferOptions o;
      o.seed = seed;
      if (n_max) o.exhaustive_n_max = n_max;
      o.random_count = 200;
      return suite_dict(verify::transfer_suite(verify::z2_fixture(true), o));
    }
    if (suite == "diagonal") {
      verify::DiagonalOptions o;
      o.n_max = n_max ? n_max : 4;
      return suite_dict(verify::diagonal_suite(presets::comm(2), o));
    }
    if (suite == "inclusion") {
      verify::InclusionOptions o;
      o.seed = seed;
      o.n_max = n_max ? n_max : 5;
      o.graphs_per_n = 5;
      return suite_dict(verify::inclusion_suite(o));
    }
    throw ValidationError("unknown suite '" + suite + "'");
  }, py::arg("suite"), py::arg("n_max") = 0, py::arg("seed") = 1,
        "Run a verification suite at a reduced size and return its report.");
}
