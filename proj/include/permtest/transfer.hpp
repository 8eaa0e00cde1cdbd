#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permtest/caps.hpp"
#include "permtest/equations.hpp"
#include "permtest/permutation.hpp"
#include "permtest/rational.hpp"
#include "permtest/word.hpp"

namespace permtest {

/// A homomorphism F_S -> F_T given by the images of the generators of S.
class PresentationMap {
 public:
  PresentationMap() = default;
  /// Throws ValidationError unless there is one image per source letter, each over the target alphabet.
  PresentationMap(std::vector<std::string> source_letters, std::vector<std::string> target_letters,
                  std::vector<Word> images);

  const std::vector<std::string>& source_letters() const noexcept { return source_; }
  const std::vector<std::string>& target_letters() const noexcept { return target_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const Word& image(std::uint32_t generator) const { return images_[generator - 1]; }

  /// lambda(w) for a word over the source alphabet.
  Word apply(const Word& w) const;

  /// Sum over source generators of |lambda(s)|.
  std::size_t lipschitz_constant() const;

  friend bool operator==(const PresentationMap&, const PresentationMap&) = default;

 private:
  std::vector<std::string> source_;
  std::vector<std::string> target_;
  std::vector<Word> images_;
};

/// outer after inner: s -> outer(inner(s)). inner's target must be outer's source.
PresentationMap compose(const PresentationMap& outer, const PresentationMap& inner);

/// lambda^*(t): coordinate i is lambda(s_i) evaluated at the target tuple t.
PermTuple pullback(const PresentationMap& lambda, const PermTuple& t);

/// One factor v r^eps v^-1 of a correction term.
struct CorrectionFactor {
  Word conjugator;
  Word relator;
  int exponent = 1;
};

/// Witnesses that lambda2(lambda1(s_i)) = s_i * prod_j v_ij r_ij^eps_ij v_ij^-1 in F_S.
struct CorrectionData {
  /// One factor list per source generator.
  std::vector<std::vector<CorrectionFactor>> factors;

  /// Q_i as the list of conjugators for generator i.
  std::size_t total_conjugators() const;
};

/// Empty string when the data certify the identity above with every r_ij in R_E;
/// otherwise a description of the first failure.
std::string validate_correction(const CorrectionData& data, const PresentationMap& lambda1,
                                const PresentationMap& lambda2, const EquationSystem& source_system);

/// Points where some relator in R_E fails: {x : exists r in R_E, r(t) x != x}.
std::vector<Point> bad_set(const PermTuple& t, const EquationSystem& system);

/// An inequality lhs <= rhs checked exactly.
struct BoundCheck {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs <= rhs; }
};

/// d(lambda1^* lambda2^* t, t) <= (sum_i |Q_i|) * |Bad_E(t)| / n.
BoundCheck check_pseudo_inverse_bound(const PermTuple& t, const PresentationMap& lambda1,
                                      const PresentationMap& lambda2, const CorrectionData& data,
                                      const EquationSystem& source_system);

/// d(lambda^* h, lambda^* h') <= C * d(h, h') with C = sum_i |lambda(s_i)|.
BoundCheck check_lipschitz_bound(const PermTuple& h, const PermTuple& h_prime, const PresentationMap& lambda);

/// Result of an exhaustive transport check.
struct TransportCheck {
  bool holds = true;
  std::optional<PermTuple> counterexample;
  std::size_t checked = 0;
};

/// Whether lambda^* sends every f in SOL_{from}(n) into SOL_{to}(n).
///
/// `from` is a system over lambda's target alphabet and `to` a system over its
/// source alphabet, matching the direction of the pullback.
TransportCheck check_solution_transport(const PresentationMap& lambda, const EquationSystem& from,
                                        const EquationSystem& to, std::uint32_t n, const Caps& caps = {});

/// d(f, lambda1^* h) <= C1 * d(lambda2^* f, h) + C2 * |Bad_E(f)| / n.
BoundCheck check_two_sided_bound(const PermTuple& f, const PermTuple& h, const PresentationMap& lambda1,
                                 const PresentationMap& lambda2, const CorrectionData& data,
                                 const EquationSystem& source_system);

/// Parameters for moving a tester for E2 back to E1 through lambda1, lambda2.
struct TransferParameters {
  WordSet words;  ///< lambda2(P2) together with R_{E1}
  std::size_t c1 = 0;
  std::size_t c2 = 0;
  Rational scaled_epsilon;  ///< eps / (2 c1), where delta2 is to be evaluated
  Rational delta;           ///< min(delta2(eps / (2 c1)), eps / (2 c2))
};

/// `delta2_at_scaled_epsilon` is delta2 evaluated at eps / (2 c1). When c2 = 0 the
/// second term of the minimum is absent.
TransferParameters transfer_parameters(const PresentationMap& lambda1, const PresentationMap& lambda2,
                                       const CorrectionData& data, const EquationSystem& source_system,
                                       const WordSet& target_words, const Rational& epsilon,
                                       const Rational& delta2_at_scaled_epsilon);

}  // namespace permtest
