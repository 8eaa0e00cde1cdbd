#include <algorithm>
#include <numeric>

#include "permtest/errors.hpp"
#include "permtest/partial_sgraph.hpp"

namespace permtest {

namespace {

void check_fits(const SGraph& g, const PartialSGraph& h) {
  if (h.d() != g.d()) throw ValidationError("partial graph and graph use different label sets");
  if (!h.vertices().empty() && *h.vertices().rbegin() > g.n()) {
    throw ValidationError("partial graph has a vertex outside [n]");
  }
}

mpz_class falling_ratio(std::uint32_t n, std::size_t vertices, mpz_class* denominator) {
  mpz_class num, den;
  mpz_fac_ui(num.get_mpz_t(), n - vertices);
  mpz_fac_ui(den.get_mpz_t(), n - 1);
  *denominator = den;
  return num;
}

}  // namespace

Rational fragment_probability(const SGraph& g, const WordSet& words, const WordSet& fragment) {
  Subset target(words.size());
  std::size_t i = 0;
  for (const Word& w : words) {
    if (fragment.contains(w)) target.set(i);
    ++i;
  }
  if (target.count() != fragment.size()) throw ValidationError("fragment is not a subset of the word list");
  if (g.n() == 0) return Rational(0);
  std::int64_t hits = 0;
  for (Point x = 1; x <= g.n(); ++x) hits += stab_fragment(g.tuple(), words, x) == target;
  return make_rational(hits, g.n());
}

Rational inclusion_probability_exact(const SGraph& g, const PartialSGraph& h, const Caps& caps) {
  check_fits(g, h);
  const std::uint32_t n = g.n();
  if (factorial(n) > caps.states) {
    throw InfeasibleError("exact inclusion probability enumerates " + std::to_string(n) +
                          "! permutations, above the state cap " + std::to_string(caps.states));
  }
  if (h.edges().empty()) return Rational(1);
  struct Edge {
    std::uint32_t u, v;
    const Permutation* s;
  };
  std::vector<Edge> edges;
  for (const LabelledEdge& e : h.edges()) edges.push_back({e.source - 1, e.target - 1, &g.tuple()[e.label - 1]});

  // pi is in the event iff pi(v) = s(pi(u)) for every edge u -s-> v.
  std::vector<std::uint32_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0U);
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  do {
    ++total;
    bool ok = true;
    for (const Edge& e : edges) {
      if (e.s->image_index(pi[e.u]) != pi[e.v]) {
        ok = false;
        break;
      }
    }
    hits += ok;
  } while (std::next_permutation(pi.begin(), pi.end()));
  mpz_class num, den;
  mpz_set_ui(num.get_mpz_t(), static_cast<unsigned long>(hits));
  mpz_set_ui(den.get_mpz_t(), static_cast<unsigned long>(total));
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational inclusion_probability(const SGraph& g, const PartialSGraph& h, std::optional<Point> base,
                               const Caps& caps) {
  check_fits(g, h);
  if (h.edges().empty()) return Rational(1);
  if (!h.is_connected()) throw ValidationError("the closed form needs a connected partial graph");
  Point y0 = base.value_or(*h.vertices().begin());
  PathInvariants inv = path_invariants(h, y0, caps);
  mpz_class den;
  mpz_class num = falling_ratio(g.n(), h.vertex_count(), &den);
  Rational factor(num, den);
  factor.canonicalize();
  return factor * fragment_probability(g, inv.base_paths, inv.stabilizer_paths);
}

InclusionEstimate inclusion_probability_general(const SGraph& g, const PartialSGraph& h, const Caps& caps) {
  check_fits(g, h);
  if (h.edges().empty()) return {Rational(1), false};
  Rational value = 1;
  for (const auto& component : h.components()) {
    PathInvariants inv = path_invariants(h, component.front(), caps);
    value *= fragment_probability(g, inv.base_paths, inv.stabilizer_paths);
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), g.n(), h.rank());
  value /= Rational(scale);
  return {value, true};
}

}  // namespace permtest
