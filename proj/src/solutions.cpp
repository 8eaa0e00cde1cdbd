#include "permtest/solutions.hpp"

#include <algorithm>
#include <cstdlib>

#include "permtest/errors.hpp"
#include "permtest/metrics.hpp"

namespace permtest {

void check_shape(const EquationSystem& system, const PermTuple& t) {
  if (t.d() != system.d()) {
    throw ValidationError("tuple has " + std::to_string(t.d()) + " entries but the system has " +
                          std::to_string(system.d()) + " letters");
  }
}

namespace {

// Evaluates on 0-based indices over a partially assigned tuple.
std::uint32_t eval_index(const Word& w, const std::vector<const Permutation*>& perms, std::uint32_t i) {
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const Permutation& p = *perms[it->generator - 1];
    i = it->positive() ? p.image_index(i) : p.preimage_index(i);
  }
  return i;
}

bool equation_holds(const Equation& eq, const std::vector<const Permutation*>& perms, std::uint32_t n) {
  for (std::uint32_t i = 0; i < n; ++i) {
    if (eval_index(eq.lhs, perms, i) != eval_index(eq.rhs, perms, i)) return false;
  }
  return true;
}

std::vector<const Permutation*> pointers(const PermTuple& t) {
  std::vector<const Permutation*> out;
  for (const Permutation& p : t.perms()) out.push_back(&p);
  return out;
}

}  // namespace

bool is_solution(const PermTuple& t, const EquationSystem& system) {
  check_shape(system, t);
  auto perms = pointers(t);
  return std::all_of(system.equations().begin(), system.equations().end(),
                     [&](const Equation& eq) { return equation_holds(eq, perms, t.n()); });
}

std::uint64_t defect_count(const PermTuple& t, const EquationSystem& system) {
  check_shape(system, t);
  auto perms = pointers(t);
  std::uint64_t count = 0;
  for (const Equation& eq : system.equations()) {
    for (std::uint32_t i = 0; i < t.n(); ++i) count += eval_index(eq.lhs, perms, i) != eval_index(eq.rhs, perms, i);
  }
  return count;
}

Rational local_defect(const PermTuple& t, const EquationSystem& system) {
  std::uint64_t count = defect_count(t, system);
  if (t.n() == 0) return Rational(0);
  return make_rational(static_cast<std::int64_t>(count), t.n());
}

void for_each_solution(const EquationSystem& system, std::uint32_t n, const Caps& caps,
                       const std::function<bool(const PermTuple&)>& visit) {
  const std::size_t d = system.d();
  if (tuple_count(n, d) > caps.states) {
    throw InfeasibleError("enumerating (" + std::to_string(n) + "!)^" + std::to_string(d) +
                          " candidate tuples exceeds the state cap " + std::to_string(caps.states));
  }
  // Equations whose highest generator is j are checked once generators 1..j are fixed.
  std::vector<std::vector<const Equation*>> checks(d + 1);
  for (const Equation& eq : system.equations()) {
    checks[std::max(eq.lhs.max_generator(), eq.rhs.max_generator())].push_back(&eq);
  }
  std::vector<Permutation> sym = all_permutations(n, caps);
  std::vector<const Permutation*> perms(d, nullptr);
  std::vector<Permutation> chosen(d);

  auto holds_at = [&](std::size_t depth) {
    for (const Equation* eq : checks[depth]) {
      if (!equation_holds(*eq, perms, n)) return false;
    }
    return true;
  };
  if (!holds_at(0)) return;
  if (d == 0) {
    visit(PermTuple({}, n));
    return;
  }

  bool stop = false;
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    for (const Permutation& p : sym) {
      perms[depth] = &p;
      if (!holds_at(depth + 1)) continue;
      if (depth + 1 == d) {
        for (std::size_t i = 0; i < d; ++i) chosen[i] = *perms[i];
        if (!visit(PermTuple(chosen, n))) {
          stop = true;
          return;
        }
      } else {
        self(self, depth + 1);
        if (stop) return;
      }
    }
  };
  recurse(recurse, 0);
}

std::vector<PermTuple> enumerate_solutions(const EquationSystem& system, std::uint32_t n, const Caps& caps) {
  std::vector<PermTuple> out;
  for_each_solution(system, n, caps, [&](const PermTuple& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::optional<NearestSolution> nearest_in(const PermTuple& t, const std::vector<PermTuple>& solutions) {
  std::optional<std::size_t> best_index;
  std::size_t best = 0;
  for (std::size_t k = 0; k < solutions.size(); ++k) {
    const PermTuple& s = solutions[k];
    if (s.d() != t.d() || s.n() != t.n()) throw ValidationError("solution and tuple differ in shape");
    std::size_t count = 0;
    for (std::size_t i = 0; i < t.d() && (!best_index || count < best); ++i) count += disagreement_count(t[i], s[i]);
    if (!best_index || count < best) {
      best = count;
      best_index = k;
      if (best == 0) break;
    }
  }
  if (!best_index) return std::nullopt;
  Rational dist = t.n() == 0 ? Rational(0) : make_rational(static_cast<std::int64_t>(best), t.n());
  return NearestSolution{dist, solutions[*best_index]};
}

std::optional<NearestSolution> nearest_solution(const PermTuple& t, const EquationSystem& system, const Caps& caps) {
  check_shape(system, t);
  std::optional<NearestSolution> best;
  std::size_t best_count = 0;
  for_each_solution(system, t.n(), caps, [&](const PermTuple& s) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < t.d(); ++i) count += disagreement_count(t[i], s[i]);
    if (!best || count < best_count) {
      best_count = count;
      best = NearestSolution{Rational(0), s};
    }
    return best_count != 0;
  });
  if (best && t.n() != 0) best->distance = make_rational(static_cast<std::int64_t>(best_count), t.n());
  return best;
}

std::optional<FlexibleNearest> flexible_nearest_solution(const PermTuple& t, const EquationSystem& system,
                                                         std::uint32_t max_m, const Caps& caps) {
  check_shape(system, t);
  const std::uint32_t n = t.n();
  if (n == 0) throw ValidationError("flexible search needs n >= 1");
  if (max_m < 1) throw ValidationError("flexible search needs a window of at least one size");
  std::vector<std::uint32_t> order;
  if (n <= max_m) order.push_back(n);
  for (std::uint32_t step = 1; n > step || n + step <= max_m; ++step) {
    if (n > step && n - step <= max_m) order.push_back(n - step);
    if (n + step <= max_m) order.push_back(n + step);
  }

  std::optional<FlexibleNearest> best;
  std::vector<std::uint32_t> searched;
  const auto d = static_cast<std::int64_t>(system.d());
  for (std::uint32_t m : order) {
    if (best) {
      std::uint32_t big = std::max(m, n);
      Rational bound = make_rational(d * std::abs(static_cast<std::int64_t>(m) - static_cast<std::int64_t>(n)), big);
      if (bound >= best->distance) continue;
    }
    searched.push_back(m);
    for_each_solution(system, m, caps, [&](const PermTuple& s) {
      Rational dist = flexible_tuple_distance(t, s);
      if (!best || dist < best->distance) best = FlexibleNearest{dist, s, m, {}};
      return best->distance != 0;
    });
    if (best && best->distance == 0) break;
  }
  if (best) best->searched_sizes = std::move(searched);
  return best;
}

}  // namespace permtest
