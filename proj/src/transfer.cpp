#include "permtest/transfer.hpp"

#include "permtest/dsl.hpp"
#include "permtest/errors.hpp"
#include "permtest/metrics.hpp"
#include "permtest/solutions.hpp"

namespace permtest {

PresentationMap::PresentationMap(std::vector<std::string> source_letters, std::vector<std::string> target_letters,
                                 std::vector<Word> images)
    : source_(std::move(source_letters)), target_(std::move(target_letters)), images_(std::move(images)) {
  if (images_.size() != source_.size()) {
    throw ValidationError("presentation map needs one image per source letter");
  }
  for (const Word& w : images_) {
    if (w.max_generator() > target_.size()) throw ValidationError("image uses a letter outside the target alphabet");
  }
}

Word PresentationMap::apply(const Word& w) const {
  Word out;
  for (const Letter& l : w.letters()) {
    if (l.generator > images_.size()) throw ValidationError("word uses a letter outside the source alphabet");
    const Word& image = images_[l.generator - 1];
    out *= l.positive() ? image : image.inverse();
  }
  return out;
}

std::size_t PresentationMap::lipschitz_constant() const {
  std::size_t c = 0;
  for (const Word& w : images_) c += w.length();
  return c;
}

PresentationMap compose(const PresentationMap& outer, const PresentationMap& inner) {
  if (inner.target_letters().size() != outer.source_letters().size()) {
    throw ValidationError("cannot compose: alphabets do not match");
  }
  std::vector<Word> images;
  for (const Word& w : inner.images()) images.push_back(outer.apply(w));
  return PresentationMap(inner.source_letters(), outer.target_letters(), std::move(images));
}

PermTuple pullback(const PresentationMap& lambda, const PermTuple& t) {
  if (t.d() != lambda.target_letters().size()) {
    throw ValidationError("pullback needs a tuple over the target alphabet (" +
                          std::to_string(lambda.target_letters().size()) + " entries, got " +
                          std::to_string(t.d()) + ")");
  }
  std::vector<Permutation> perms;
  for (const Word& w : lambda.images()) perms.push_back(evaluate(w, t));
  return PermTuple(std::move(perms), t.n());
}

std::size_t CorrectionData::total_conjugators() const {
  std::size_t total = 0;
  for (const auto& list : factors) total += list.size();
  return total;
}

std::string validate_correction(const CorrectionData& data, const PresentationMap& lambda1,
                                const PresentationMap& lambda2, const EquationSystem& source_system) {
  const std::size_t d = source_system.d();
  if (lambda1.source_letters().size() != d || lambda2.target_letters().size() != d) {
    return "maps do not start and end at the source alphabet";
  }
  if (data.factors.size() != d) return "correction data needs one factor list per source generator";
  WordSet allowed = relators(source_system);
  PresentationMap round_trip = compose(lambda2, lambda1);
  for (std::size_t i = 0; i < d; ++i) {
    Word rhs = Word::generator(static_cast<std::uint32_t>(i + 1));
    for (const CorrectionFactor& f : data.factors[i]) {
      if (f.exponent != 1 && f.exponent != -1) return "exponent must be +1 or -1";
      if (!allowed.contains(f.relator)) {
        return "factor for " + source_system.letter_names()[i] + " uses '" +
               render_word(f.relator, source_system.letter_names()) + "', which is not a relator of the system";
      }
      rhs *= f.conjugator * f.relator.power(f.exponent) * f.conjugator.inverse();
    }
    if (round_trip.image(static_cast<std::uint32_t>(i + 1)) * rhs.inverse() != Word()) {
      return "factorization fails for generator " + source_system.letter_names()[i];
    }
  }
  return "";
}

std::vector<Point> bad_set(const PermTuple& t, const EquationSystem& system) {
  check_shape(system, t);
  WordSet rels = relators(system);
  std::vector<Point> out;
  for (Point x = 1; x <= t.n(); ++x) {
    for (const Word& r : rels) {
      if (evaluate_point(r, t, x) != x) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

namespace {

void require_valid(const CorrectionData& data, const PresentationMap& lambda1, const PresentationMap& lambda2,
                   const EquationSystem& source_system) {
  std::string problem = validate_correction(data, lambda1, lambda2, source_system);
  if (!problem.empty()) throw ValidationError("invalid correction data: " + problem);
}

Rational bad_fraction(const PermTuple& t, const EquationSystem& system) {
  if (t.n() == 0) return Rational(0);
  return make_rational(static_cast<std::int64_t>(bad_set(t, system).size()), t.n());
}

}  // namespace

BoundCheck check_pseudo_inverse_bound(const PermTuple& t, const PresentationMap& lambda1,
                                      const PresentationMap& lambda2, const CorrectionData& data,
                                      const EquationSystem& source_system) {
  require_valid(data, lambda1, lambda2, source_system);
  check_shape(source_system, t);
  BoundCheck check;
  check.lhs = tuple_distance(t, pullback(lambda1, pullback(lambda2, t)));
  check.rhs = Rational(static_cast<unsigned long>(data.total_conjugators())) * bad_fraction(t, source_system);
  return check;
}

BoundCheck check_lipschitz_bound(const PermTuple& h, const PermTuple& h_prime, const PresentationMap& lambda) {
  BoundCheck check;
  check.lhs = tuple_distance(pullback(lambda, h), pullback(lambda, h_prime));
  check.rhs = Rational(static_cast<unsigned long>(lambda.lipschitz_constant())) * tuple_distance(h, h_prime);
  return check;
}

BoundCheck check_two_sided_bound(const PermTuple& f, const PermTuple& h, const PresentationMap& lambda1,
                                 const PresentationMap& lambda2, const CorrectionData& data,
                                 const EquationSystem& source_system) {
  require_valid(data, lambda1, lambda2, source_system);
  check_shape(source_system, f);
  BoundCheck check;
  check.lhs = tuple_distance(f, pullback(lambda1, h));
  check.rhs = Rational(static_cast<unsigned long>(lambda1.lipschitz_constant())) *
                  tuple_distance(pullback(lambda2, f), h) +
              Rational(static_cast<unsigned long>(data.total_conjugators())) * bad_fraction(f, source_system);
  return check;
}

TransportCheck check_solution_transport(const PresentationMap& lambda, const EquationSystem& from,
                                        const EquationSystem& to, std::uint32_t n, const Caps& caps) {
  if (from.d() != lambda.target_letters().size() || to.d() != lambda.source_letters().size()) {
    throw ValidationError("systems do not match the map's alphabets");
  }
  TransportCheck result;
  for_each_solution(from, n, caps, [&](const PermTuple& f) {
    ++result.checked;
    if (!is_solution(pullback(lambda, f), to)) {
      result.holds = false;
      result.counterexample = f;
      return false;
    }
    return true;
  });
  return result;
}

TransferParameters transfer_parameters(const PresentationMap& lambda1, const PresentationMap& lambda2,
                                       const CorrectionData& data, const EquationSystem& source_system,
                                       const WordSet& target_words, const Rational& epsilon,
                                       const Rational& delta2_at_scaled_epsilon) {
  require_valid(data, lambda1, lambda2, source_system);
  if (epsilon <= 0) throw ValidationError("epsilon must be positive");
  TransferParameters p;
  for (const Word& w : target_words) p.words.insert(lambda2.apply(w));
  p.words.merge(relators(source_system));
  p.c1 = lambda1.lipschitz_constant();
  p.c2 = data.total_conjugators();
  if (p.c1 == 0) throw ValidationError("C1 = 0: lambda1 sends every generator to the empty word");
  p.scaled_epsilon = epsilon / Rational(static_cast<unsigned long>(2 * p.c1));
  p.delta = delta2_at_scaled_epsilon;
  if (p.c2 > 0) {
    Rational second = epsilon / Rational(static_cast<unsigned long>(2 * p.c2));
    if (second < p.delta) p.delta = second;
  }
  return p;
}

}  // namespace permtest
