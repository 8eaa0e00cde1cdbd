#include <algorithm>
#include <set>

#include "permtest/errors.hpp"
#include "permtest/dsl.hpp"
#include "permtest/metrics.hpp"
#include "permtest/rng.hpp"
#include "permtest/solutions.hpp"
#include "permtest/testers.hpp"

namespace permtest {

std::shared_ptr<const LsmContext> make_lsm_context(const EquationSystem& system, std::uint32_t n,
                                                   const WordSet& words, const Caps& caps) {
  for (const Word& w : words) {
    if (w.max_generator() > system.d()) throw ValidationError("word uses a generator outside the system alphabet");
  }
  auto ctx = std::make_shared<LsmContext>();
  ctx->system = system;
  ctx->n = n;
  ctx->words = words;
  std::set<LocalDistribution> views;
  for_each_solution(system, n, caps, [&](const PermTuple& s) {
    views.insert(local_distribution(s, words));
    ++ctx->solution_count;
    return true;
  });
  ctx->solution_distributions.assign(views.begin(), views.end());
  return ctx;
}

namespace {

std::string word_key(const WordSet& words) {
  std::string key;
  for (const Word& w : words) {
    for (const Letter& l : w.letters()) key += (l.positive() ? "+" : "-") + std::to_string(l.generator);
    key += ";";
  }
  return key;
}

}  // namespace

std::shared_ptr<const LsmContext> LsmContextCache::get(const EquationSystem& system, std::uint32_t n,
                                                       const WordSet& words, const Caps& caps) {
  auto key = std::make_tuple(render_system(system), n, word_key(words));
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = contexts_.find(key); it != contexts_.end()) return it->second;
  }
  auto ctx = make_lsm_context(system, n, words, caps);
  std::lock_guard<std::mutex> lock(mutex_);
  return contexts_.emplace(key, ctx).first->second;
}

std::size_t LsmContextCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return contexts_.size();
}

bool lsm_decide(const LocalDistribution& empirical, const LsmContext& context, const Rational& delta) {
  return std::any_of(context.solution_distributions.begin(), context.solution_distributions.end(),
                     [&](const LocalDistribution& view) { return tv_distance(empirical, view) <= delta; });
}

namespace {

void check_context(const PermTuple& t, const LsmContext& context) {
  check_shape(context.system, t);
  if (t.n() != context.n) throw ValidationError("tuple size does not match the tester context");
  if (t.n() == 0) throw ValidationError("the local statistics matcher needs n >= 1");
}

Subset query_fragment(OracleTuple& oracle, const WordSet& words, Point x) {
  Subset s(words.size());
  std::size_t i = 0;
  for (const Word& w : words) {
    if (oracle.walk(w, x) == x) s.set(i);
    ++i;
  }
  return s;
}

Verdict finish(OracleTuple& oracle, const std::vector<Subset>& fragments, const std::vector<std::uint64_t>& counts,
               const LsmContext& context, const Rational& delta, std::uint64_t seed) {
  Verdict v;
  v.accepted = lsm_decide(empirical_distribution(fragments, counts), context, delta);
  v.queries_used = oracle.queries();
  v.inverse_queries = oracle.inverse_queries();
  v.transcript = oracle.transcript();
  v.seed = seed;
  v.rng = std::string(kRngFamily);
  return v;
}

}  // namespace

Verdict lsm(const PermTuple& t, const LsmContext& context, std::uint64_t k, const Rational& delta,
            std::uint64_t seed) {
  check_context(t, context);
  if (k == 0) throw ValidationError("the local statistics matcher needs k >= 1");
  Rng rng = make_rng(seed);
  std::uniform_int_distribution<Point> pick_point(1, t.n());
  OracleTuple oracle(t);
  std::vector<Subset> fragments(t.n(), Subset(context.words.size()));
  std::vector<std::uint64_t> counts(t.n(), 0);
  for (std::uint64_t j = 0; j < k; ++j) {
    Point x = pick_point(rng);
    fragments[x - 1] = query_fragment(oracle, context.words, x);
    ++counts[x - 1];
  }
  return finish(oracle, fragments, counts, context, delta, seed);
}

Verdict lsm_aggregated(const PermTuple& t, const LsmContext& context, std::uint64_t k, const Rational& delta,
                       std::uint64_t seed) {
  check_context(t, context);
  if (k == 0) throw ValidationError("the local statistics matcher needs k >= 1");
  Rng rng = make_rng(seed);
  OracleTuple oracle(t);
  std::vector<Subset> fragments(t.n(), Subset(context.words.size()));
  std::vector<std::uint64_t> counts(t.n(), 0);
  std::uint64_t remaining = k;
  for (Point x = 1; x <= t.n(); ++x) {
    std::uint64_t c = remaining;
    if (x < t.n() && remaining > 0) {
      std::binomial_distribution<std::uint64_t> draw(remaining, 1.0 / static_cast<double>(t.n() - x + 1));
      c = draw(rng);
    }
    counts[x - 1] = c;
    remaining -= c;
    if (c > 0) fragments[x - 1] = query_fragment(oracle, context.words, x);
  }
  return finish(oracle, fragments, counts, context, delta, seed);
}

std::uint64_t lsm_params(std::size_t word_count, const Rational& delta) {
  if (delta <= 0) throw ValidationError("delta must be positive");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, word_count);
  mpz_class num = 100 * scale * delta.get_den() * delta.get_den();
  mpz_class den = delta.get_num() * delta.get_num();
  mpz_class k;
  mpz_cdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (mpz_sizeinbase(k.get_mpz_t(), 2) > 64) {
    throw InfeasibleError("sample count 100 * 2^" + std::to_string(word_count) + " / delta^2 does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, k.get_mpz_t());
  return out;
}

std::vector<PermTuple> far_tuples(const EquationSystem& system, std::uint32_t n, const Rational& eps,
                                  const Caps& caps) {
  std::vector<PermTuple> solutions = enumerate_solutions(system, n, caps);
  std::vector<PermTuple> out;
  if (solutions.empty()) return out;
  // A tuple is far iff it has at least ceil(eps * n) disagreements with every solution.
  Rational threshold_q = eps * n;
  mpz_class threshold;
  mpz_cdiv_q(threshold.get_mpz_t(), threshold_q.get_num_mpz_t(), threshold_q.get_den_mpz_t());
  const std::size_t need = threshold <= 0 ? 0 : threshold.get_ui();
  for_each_tuple(n, system.d(), caps, [&](const PermTuple& t) {
    for (const PermTuple& s : solutions) {
      std::size_t count = 0;
      for (std::size_t i = 0; i < t.d() && count < need; ++i) count += disagreement_count(t[i], s[i]);
      if (count < need) return true;
    }
    out.push_back(t);
    return true;
  });
  return out;
}

Distinguishability distinguishability(const EquationSystem& system, std::uint32_t n, const WordSet& words,
                                      const Rational& eps, const Caps& caps) {
  Distinguishability result;
  std::set<LocalDistribution> solution_views;
  for_each_solution(system, n, caps, [&](const PermTuple& s) {
    solution_views.insert(local_distribution(s, words));
    ++result.solutions;
    return true;
  });
  std::set<LocalDistribution> far_views;
  for (const PermTuple& t : far_tuples(system, n, eps, caps)) {
    far_views.insert(local_distribution(t, words));
    ++result.far_tuples;
  }
  result.distinct_solution_views = solution_views.size();
  result.distinct_far_views = far_views.size();
  for (const LocalDistribution& a : solution_views) {
    for (const LocalDistribution& b : far_views) {
      Rational tv = tv_distance(a, b);
      if (!result.delta || tv < *result.delta) result.delta = tv;
    }
  }
  return result;
}

}  // namespace permtest
