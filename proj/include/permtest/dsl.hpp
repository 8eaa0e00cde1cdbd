#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permtest/equations.hpp"

namespace permtest {

/// Parses the equation DSL.
///
///     letters X Y
///     # comment
///     X Y = Y X
///     X^-1 Y X = 1
///
/// Throws ParseError carrying line and column on malformed input.
EquationSystem parse_system(std::string_view text);

/// Canonical printer; parse_system(render_system(E)) == E.
std::string render_system(const EquationSystem& system);

/// Parses one term ("1" or letter names with optional "^-1") against a fixed alphabet.
Word parse_word(std::string_view text, const std::vector<std::string>& letter_names);

/// Space-separated letter names, or "1" for the empty word.
std::string render_word(const Word& word, const std::vector<std::string>& letter_names);

/// Reads a file and parses it as a system.
EquationSystem load_system(const std::string& path);

}  // namespace permtest
