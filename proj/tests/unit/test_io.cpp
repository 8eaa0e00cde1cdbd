#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "permtest/dsl.hpp"
#include "permtest/errors.hpp"
#include "permtest/io.hpp"
#include "permtest/presets.hpp"
#include "permtest/testers.hpp"
#include "permtest/verify.hpp"

using namespace permtest;
using permtest::io::Json;

TEST_CASE("rational formatting and parsing") {
  CHECK(to_fraction_string(make_rational(2, 3)) == "2/3");
  CHECK(to_fraction_string(make_rational(0)) == "0/1");
  CHECK(to_fraction_string(make_rational(4, 2)) == "2/1");
  CHECK(to_decimal_string(make_rational(2, 3)) == "0.666666666667");
  CHECK(to_display_string(make_rational(1, 4)) == "1/4 (0.25)");
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(parse_rational("0.25") == make_rational(1, 4));
  CHECK(parse_rational("-2") == -2);
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(make_rational(1, 0), ValidationError);
}

TEST_CASE("tuple JSON") {
  PermTuple t = io::tuple_from_json(Json::parse(R"({"n": 3, "perms": [[2, 1, 3], [3, 2, 1]]})"));
  CHECK(t.n() == 3);
  CHECK(t.d() == 2);
  CHECK(t[0](1) == 2);
  CHECK(io::tuple_from_json(io::tuple_to_json(t)) == t);
  CHECK_THROWS_AS(io::tuple_from_json(Json::parse(R"({"n": 3, "perms": [[2, 1]]})")), ValidationError);
  CHECK_THROWS_AS(io::tuple_from_json(Json::parse(R"({"n": 3, "perms": [[2, 2, 1]]})")), ValidationError);
  CHECK_THROWS_AS(io::tuple_from_json(Json::parse(R"({"n": 2, "perms": [[0, 1]]})")), ValidationError);
  CHECK_THROWS_AS(io::tuple_from_json(Json::parse(R"({"n": 2, "perms": [[1, 2]], "x": 1})")), ValidationError);
  CHECK_THROWS_AS(io::tuple_from_json(Json::parse(R"({"perms": [[1, 2]]})")), ValidationError);
  CHECK_THROWS_AS(io::tuple_from_json(Json::parse(R"([1, 2])")), ValidationError);
  CHECK_THROWS_AS(io::load_tuple("/nonexistent/tuple.json"), ValidationError);

  auto path = std::filesystem::temp_directory_path() / "permtest_io_tuple.json";
  io::save_tuple(path.string(), t);
  CHECK(io::load_tuple(path.string()) == t);
  {
    std::ofstream bad(path);
    bad << "{ not json";
  }
  CHECK_THROWS_AS(io::load_tuple(path.string()), ParseError);
  std::filesystem::remove(path);
}

TEST_CASE("word lists") {
  WordSet w = io::parse_word_list("X\n# comment\n\nX Y^-1  # trailing\n1\nX\n", {"X", "Y"});
  CHECK(w.size() == 3);
  CHECK(w.words()[2].empty());
  CHECK_THROWS_AS(io::parse_word_list("X Z\n", {"X", "Y"}), ParseError);
}

TEST_CASE("maps and corrections round trip") {
  verify::TransferFixture fx = verify::z2_fixture(true);
  CHECK(io::map_from_json(io::map_to_json(fx.lambda1)) == fx.lambda1);
  CHECK(io::map_from_json(io::map_to_json(fx.lambda2)) == fx.lambda2);
  Json corr = io::correction_to_json(fx.correction, fx.source.letter_names());
  CorrectionData back = io::correction_from_json(corr, fx.source.letter_names());
  REQUIRE(back.factors.size() == 3);
  REQUIRE(back.factors[2].size() == 1);
  CHECK(back.factors[2][0].conjugator == fx.correction.factors[2][0].conjugator);
  CHECK(back.factors[2][0].relator == fx.correction.factors[2][0].relator);
  CHECK(back.factors[2][0].exponent == -1);

  CHECK_THROWS_AS(io::map_from_json(Json::parse(R"({"source_letters": ["X"], "target_letters": ["a"], "images": {}})")),
                  ValidationError);
  CHECK_THROWS_AS(io::correction_from_json(Json::parse(R"({"corrections": {"q": []}})"), {"a"}), ValidationError);
  CHECK_THROWS_AS(
      io::correction_from_json(Json::parse(R"({"corrections": {"a": [{"v": "a", "r": "a", "eps": 2}]}})"), {"a"}),
      ValidationError);

  std::string dir = PERMTEST_FIXTURE_DIR;
  EquationSystem src = load_system(dir + "/z2_pair_swapped/source.eq");
  CHECK(src == fx.source);
  CHECK(io::load_map(dir + "/z2_pair_swapped/lambda1.json") == fx.lambda1);
  CHECK(io::load_map(dir + "/z2_pair_swapped/lambda2.json") == fx.lambda2);
  CorrectionData loaded = io::load_correction(dir + "/z2_pair_swapped/corrections.json", src.letter_names());
  CHECK(validate_correction(loaded, fx.lambda1, fx.lambda2, fx.source).empty());
}

TEST_CASE("verdict reports") {
  PermTuple t({Permutation::from_cycles(3, {{1, 2}}), Permutation::from_cycles(3, {{1, 3}})});
  Verdict v = sas(t, presets::comm(2), 2, 5);
  Json r = io::verdict_report("sas", Json{{"k", 2}}, v, {"X", "Y"});
  CHECK(r["tester"] == "sas");
  CHECK(r["verdict"] == false);
  CHECK(r["queries"] == 8);
  CHECK(r["seed"] == 5);
  CHECK(r["rng"] == "mt19937_64+splitmix64/1");
  CHECK(r["transcript"].is_array());
  for (const auto& e : r["transcript"]) {
    CHECK(e.size() == 3);
    CHECK(e[1].is_string());
  }
}
