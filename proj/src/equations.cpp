#include "permtest/equations.hpp"

#include <algorithm>
#include <set>

#include "permtest/errors.hpp"

namespace permtest {

EquationSystem::EquationSystem(std::vector<std::string> letter_names, std::vector<Equation> equations)
    : names_(std::move(letter_names)), equations_(std::move(equations)) {
  std::set<std::string> seen;
  for (const std::string& name : names_) {
    if (name.empty()) throw ValidationError("empty letter name");
    if (!seen.insert(name).second) throw ValidationError("duplicate letter name '" + name + "'");
  }
  for (const Equation& eq : equations_) {
    std::uint32_t m = std::max(eq.lhs.max_generator(), eq.rhs.max_generator());
    if (m > names_.size()) {
      throw ValidationError("equation uses generator " + std::to_string(m) + " but only " +
                            std::to_string(names_.size()) + " letters are declared");
    }
  }
}

Word relator(const Equation& eq) { return eq.lhs * eq.rhs.inverse(); }

WordSet relators(const EquationSystem& system) {
  WordSet out;
  for (const Equation& eq : system.equations()) out.insert(relator(eq));
  return out;
}

std::size_t total_length(const EquationSystem& system) {
  std::size_t total = 0;
  for (const Equation& eq : system.equations()) total += eq.lhs.length() + eq.rhs.length();
  return total;
}

bool is_inverseless(const EquationSystem& system) {
  return std::none_of(system.equations().begin(), system.equations().end(), [](const Equation& eq) {
    return eq.lhs.has_negative_letter() || eq.rhs.has_negative_letter();
  });
}

namespace {

Word substitute_bars(const Word& w, std::uint32_t d) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (const Letter& l : w.letters()) {
    out.push_back(l.positive() ? l : Letter{l.generator + d, 1});
  }
  return Word::from_letters(out);
}

}  // namespace

EquationSystem to_inverseless(const EquationSystem& system) {
  const auto d = static_cast<std::uint32_t>(system.d());
  std::vector<std::string> names = system.letter_names();
  std::set<std::string> taken(names.begin(), names.end());
  for (std::uint32_t i = 0; i < d; ++i) {
    std::string bar = system.letter_names()[i] + "_bar";
    while (taken.count(bar) != 0) bar += "_bar";
    taken.insert(bar);
    names.push_back(bar);
  }
  std::vector<Equation> equations;
  for (const Equation& eq : system.equations()) {
    equations.push_back({substitute_bars(eq.lhs, d), substitute_bars(eq.rhs, d)});
  }
  for (std::uint32_t i = 1; i <= d; ++i) {
    Equation inv{Word::from_letters({Letter{i, 1}, Letter{i + d, 1}}), Word()};
    if (std::find(equations.begin(), equations.end(), inv) == equations.end()) equations.push_back(inv);
  }
  return EquationSystem(std::move(names), std::move(equations));
}

}  // namespace permtest
