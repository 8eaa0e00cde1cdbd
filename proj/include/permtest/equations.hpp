#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "permtest/word.hpp"

namespace permtest {

/// lhs = rhs in the free group.
struct Equation {
  Word lhs;
  Word rhs;
  friend bool operator==(const Equation&, const Equation&) = default;
};

/// A finite system of equations over named generators s_1..s_d.
///
/// Equations keep their order and multiplicity; the sample-based tester
/// draws from this list uniformly.
class EquationSystem {
 public:
  EquationSystem() = default;
  /// Throws ValidationError on empty or duplicate names or out-of-range generators.
  EquationSystem(std::vector<std::string> letter_names, std::vector<Equation> equations);

  std::size_t d() const noexcept { return names_.size(); }
  std::size_t r() const noexcept { return equations_.size(); }
  const std::vector<std::string>& letter_names() const noexcept { return names_; }
  const std::vector<Equation>& equations() const noexcept { return equations_; }
  const Equation& operator[](std::size_t i) const { return equations_[i]; }

  friend bool operator==(const EquationSystem&, const EquationSystem&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Equation> equations_;
};

/// The relator of one equation: reduce(lhs * rhs^-1).
Word relator(const Equation& eq);

/// {reduce(lhs * rhs^-1)} over all equations, duplicates removed, in equation order.
WordSet relators(const EquationSystem& system);

/// Sum over equations of |lhs| + |rhs|.
std::size_t total_length(const EquationSystem& system);

/// True when no equation side contains an inverse letter.
bool is_inverseless(const EquationSystem& system);

/// Equivalent inverseless system over 2d generators.
///
/// Generator s_{d+i} (named "<name>_bar") stands for s_i^-1. Each equation side
/// has its inverse letters substituted, then the equations s_i s_{d+i} = 1
/// are appended unless already present.
EquationSystem to_inverseless(const EquationSystem& system);

}  // namespace permtest
