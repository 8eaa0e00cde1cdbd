#include "permtest/local_stats.hpp"

#include "permtest/errors.hpp"

namespace permtest {

Subset stab_fragment(const PermTuple& t, const WordSet& words, Point x) {
  Subset s(words.size());
  std::size_t i = 0;
  for (const Word& w : words) {
    if (evaluate_point(w, t, x) == x) s.set(i);
    ++i;
  }
  return s;
}

void LocalDistribution::add(const Subset& s, const Rational& mass) {
  if (s.universe() != universe_) throw ValidationError("subset universe does not match the distribution");
  if (mass == 0) return;
  auto [it, inserted] = masses_.emplace(s, mass);
  if (!inserted) {
    it->second += mass;
    if (it->second == 0) masses_.erase(it);
  }
}

Rational LocalDistribution::mass(const Subset& s) const {
  auto it = masses_.find(s);
  return it == masses_.end() ? Rational(0) : it->second;
}

Rational LocalDistribution::total_mass() const {
  Rational total = 0;
  for (const auto& [s, m] : masses_) total += m;
  return total;
}

LocalDistribution LocalDistribution::marginal(const std::vector<std::size_t>& keep) const {
  LocalDistribution out(keep.size());
  for (const auto& [s, m] : masses_) out.add(s.project(keep), m);
  return out;
}

LocalDistribution local_distribution(const PermTuple& t, const WordSet& words) {
  LocalDistribution out(words.size());
  if (t.n() == 0) return out;
  const Rational unit = make_rational(1, t.n());
  for (Point x = 1; x <= t.n(); ++x) out.add(stab_fragment(t, words, x), unit);
  return out;
}

LocalDistribution empirical_distribution(const std::vector<Subset>& fragments,
                                         const std::vector<std::uint64_t>& counts) {
  if (fragments.size() != counts.size()) throw ValidationError("fragment and count lists differ in length");
  std::size_t universe = fragments.empty() ? 0 : fragments.front().universe();
  std::map<Subset, mpz_class> tally;
  mpz_class total = 0;
  for (std::size_t i = 0; i < fragments.size(); ++i) {
    if (counts[i] == 0) continue;
    mpz_class c;
    mpz_set_ui(c.get_mpz_t(), static_cast<unsigned long>(counts[i]));
    tally[fragments[i]] += c;
    total += c;
  }
  LocalDistribution out(universe);
  if (total == 0) return out;
  for (const auto& [s, c] : tally) {
    Rational m(c, total);
    m.canonicalize();
    out.add(s, m);
  }
  return out;
}

Rational tv_distance(const LocalDistribution& a, const LocalDistribution& b) {
  if (a.universe() != b.universe()) throw ValidationError("distributions live on different word lists");
  Rational sum = 0;
  auto ia = a.support().begin();
  auto ib = b.support().begin();
  const auto ea = a.support().end();
  const auto eb = b.support().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      sum += abs(ia->second);
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      sum += abs(ib->second);
      ++ib;
    } else {
      sum += abs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return sum / 2;
}

}  // namespace permtest
