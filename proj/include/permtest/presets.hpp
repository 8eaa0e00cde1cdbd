#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permtest/equations.hpp"

namespace permtest::presets {

/// Pairwise commutation of d generators.
EquationSystem comm(std::uint32_t d);
/// X Y^m = Y^n X. Negative exponents are allowed; zero is not.
EquationSystem baumslag_solitar(int m, int n);
/// [s1,s2][s3,s4]...[s_{2g-1},s_{2g}] = 1.
EquationSystem surface(std::uint32_t genus);
/// X Y = Y X Z, X Z = Z X, Y Z = Z Y.
EquationSystem heisenberg();
/// Steinberg-type relations for elementary matrices s_ij, i != j in 1..m.
EquationSystem special_linear(std::uint32_t m);
/// The 15 relations on d2, d3, s12, s13, s23, s24, s34 for a prime p.
EquationSystem abels(std::uint32_t p);

/// Builds a preset from "comm:3", "bs:2,3", "surface:2", "heisenberg", "sl:3" or "abels:2".
EquationSystem from_spec(std::string_view spec);

/// Preset families with a one-line description each.
std::vector<std::pair<std::string, std::string>> catalogue();

}  // namespace permtest::presets
