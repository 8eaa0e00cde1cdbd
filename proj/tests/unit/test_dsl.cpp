#include <doctest.h>

#include <fstream>
#include <sstream>

#include "permtest/dsl.hpp"
#include "permtest/equations.hpp"
#include "permtest/errors.hpp"
#include "permtest/presets.hpp"

using namespace permtest;

namespace {
EquationSystem golden(const std::string& name) { return load_system(std::string(PERMTEST_GOLDEN_DIR) + "/" + name); }

std::vector<std::pair<Word, Word>> sorted_equations(const EquationSystem& e) {
  std::vector<std::pair<Word, Word>> out;
  for (const auto& eq : e.equations()) out.emplace_back(eq.lhs, eq.rhs);
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

TEST_CASE("parsing the system syntax") {
  EquationSystem comm = parse_system("letters X Y\nX Y = Y X");
  CHECK(comm.d() == 2);
  CHECK(comm.r() == 1);

  EquationSystem bs = parse_system("letters X Y\nX Y Y = Y Y Y X\n");
  CHECK(bs == presets::baumslag_solitar(2, 3));

  EquationSystem cube = parse_system("letters X\nX X X = 1\n");
  CHECK(cube.d() == 1);
  CHECK(cube.r() == 1);
  CHECK(cube[0].rhs.empty());

  EquationSystem commented = parse_system("# header\n\nletters X Y   # names\nX^-1 Y X = Y  # conj\n");
  CHECK(commented.r() == 1);
  CHECK(commented[0].lhs.length() == 3);
}

TEST_CASE("parse errors carry positions") {
  auto position = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_system(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(position("letters X Y\nX Q = Y X\n") == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(position("letters X\nX X\n").first == 2);
  CHECK(position("X = X\n").first == 1);
  CHECK(position("letters X\nX^2 = 1\n") == std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(position("letters X\nX = = X\n").first == 2);
  CHECK(position("letters X X\n").first == 1);
  CHECK_THROWS_AS(parse_system("letters X\nX = \n"), ParseError);
}

TEST_CASE("render and parse round trip") {
  for (const char* spec : {"comm:1", "comm:2", "comm:4", "bs:2,3", "bs:1,-1", "bs:-2,3", "surface:1", "surface:3",
                           "heisenberg", "sl:2", "sl:3", "sl:4", "abels:2", "abels:5"}) {
    CAPTURE(spec);
    EquationSystem e = presets::from_spec(spec);
    CHECK(parse_system(render_system(e)) == e);
    CHECK(render_system(parse_system(render_system(e))) == render_system(e));
  }
}

TEST_CASE("presets match the golden transcriptions") {
  CHECK(presets::comm(3) == golden("comm3.eq"));
  CHECK(presets::baumslag_solitar(2, 3) == golden("bs23.eq"));
  CHECK(presets::surface(2) == golden("surface2.eq"));
  CHECK(presets::heisenberg() == golden("heisenberg.eq"));
  EquationSystem sl3 = presets::special_linear(3);
  CHECK(sl3.letter_names() == golden("sl3.eq").letter_names());
  CHECK(sorted_equations(sl3) == sorted_equations(golden("sl3.eq")));
  CHECK(presets::abels(2) == golden("abels2.eq"));
  CHECK(presets::abels(3) == golden("abels3.eq"));
}

TEST_CASE("preset shapes") {
  EquationSystem comm2 = presets::comm(2);
  CHECK(comm2 == parse_system("letters X Y\nX Y = Y X\n"));
  CHECK(presets::comm(3).r() == 3);
  CHECK(presets::comm(5).r() == 10);
  CHECK(relators(presets::comm(3)).size() == 3);

  EquationSystem sl3 = presets::special_linear(3);
  CHECK(sl3.d() == 6);
  const auto& names = sl3.letter_names();
  Word x = parse_word("s12 s21^-1 s12", names);
  bool has_torsion = false;
  for (const auto& eq : sl3.equations()) has_torsion = has_torsion || (eq.lhs == x.power(4) && eq.rhs.empty());
  CHECK(has_torsion);

  EquationSystem a2 = presets::abels(2);
  CHECK(a2.d() == 7);
  CHECK(a2.r() == 15);
  const auto& an = a2.letter_names();
  auto contains = [&](const char* lhs, const char* rhs) {
    Equation e{parse_word(lhs, an), parse_word(rhs, an)};
    return std::find(a2.equations().begin(), a2.equations().end(), e) != a2.equations().end();
  };
  CHECK(contains("d2 d3", "d3 d2"));
  CHECK(contains("s12 d2", "d2 s12 s12"));

  CHECK_THROWS_AS(presets::abels(4), ValidationError);
  CHECK_THROWS_AS(presets::special_linear(1), ValidationError);
  CHECK_THROWS_AS(presets::baumslag_solitar(0, 2), ValidationError);
  CHECK_THROWS_AS(presets::from_spec("nope:3"), ValidationError);
  CHECK_THROWS_AS(presets::from_spec("comm:x"), ValidationError);
  CHECK(presets::catalogue().size() == 6);
}

TEST_CASE("inverseless conversion") {
  EquationSystem comm = presets::comm(2);
  EquationSystem inv = to_inverseless(comm);
  CHECK(inv == parse_system("letters X Y X_bar Y_bar\nX Y = Y X\nX X_bar = 1\nY Y_bar = 1\n"));
  CHECK(is_inverseless(inv));
  CHECK_FALSE(is_inverseless(parse_system("letters X Y\nX Y^-1 = 1\n")));

  EquationSystem conj = parse_system("letters X Y\nX Y X^-1 = Y Y\n");
  EquationSystem conj_inv = to_inverseless(conj);
  CHECK(conj_inv == parse_system("letters X Y X_bar Y_bar\nX Y X_bar = Y Y\nX X_bar = 1\nY Y_bar = 1\n"));

  EquationSystem cancel = parse_system("letters X\nX X^-1 = 1\n");
  EquationSystem cancel_inv = to_inverseless(cancel);
  CHECK(cancel_inv.d() == 2);
  CHECK(is_inverseless(cancel_inv));
  CHECK(cancel_inv.r() <= 2);

  for (const char* spec : {"bs:2,3", "heisenberg", "sl:3", "abels:2", "surface:2"}) {
    CAPTURE(spec);
    EquationSystem e = presets::from_spec(spec);
    EquationSystem converted = to_inverseless(e);
    CHECK(converted.d() == 2 * e.d());
    CHECK(is_inverseless(converted));
    CHECK(to_inverseless(converted).d() == 4 * e.d());
  }
}
