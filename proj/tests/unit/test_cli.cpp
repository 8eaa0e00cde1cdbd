#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = permtest::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("test command exit codes") {
  std::string sol = write_temp("cli_sol.json", R"({"n": 3, "perms": [[2, 3, 1], [3, 1, 2]]})");
  std::string far = write_temp("cli_far.json", R"({"n": 3, "perms": [[2, 1, 3], [3, 2, 1]]})");
  std::string bad = write_temp("cli_bad.json", R"({"n": 3, "perms": [[2, 1]]})");
  Run ok = run({"test", "--preset", "comm:2", "--tuple", sol, "--tester", "sas", "-k", "50", "--seed", "7"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"verdict\":true") != std::string::npos);
  CHECK(ok.out.find("\"queries\":200") != std::string::npos);
  CHECK(ok.out.find("\"seed\":7") != std::string::npos);

  int rejected = 0;
  for (int seed = 1; seed <= 100; ++seed) {
    rejected += run({"--seed", std::to_string(seed), "test", "--preset", "comm:2", "--tuple", far, "-k", "5"}).code == 1;
  }
  CHECK(rejected >= 99);

  Run malformed = run({"test", "--preset", "comm:2", "--tuple", bad});
  CHECK(malformed.code == 2);
  CHECK(malformed.err.find("permutation 1") != std::string::npos);
  CHECK(run({"test", "--preset", "comm:3", "--tuple", sol}).code == 2);
  CHECK(run({"test", "--tuple", sol}).code == 2);
  CHECK(run({"test", "--preset", "comm:2", "--system", "x.eq", "--tuple", sol}).code == 2);
  CHECK(run({"test", "--preset", "comm:2", "--tuple", sol, "--tester", "magic"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);

  Run lsm = run({"test", "--preset", "comm:2", "--tuple", sol, "--tester", "lsm", "--delta", "1/2", "-k", "30"});
  CHECK(lsm.code == 0);
  Run trials = run({"test", "--preset", "comm:2", "--tuple", far, "--trials", "4", "-k", "3"});
  CHECK(std::count(trials.out.begin(), trials.out.end(), '\n') == 4);

  std::string graph = (std::filesystem::temp_directory_path() / "cli_transcript.txt").string();
  CHECK(run({"--emit-graph", graph, "test", "--preset", "comm:2", "--tuple", sol, "-k", "2"}).code == 0);
  CHECK(!slurp(graph).empty());
}

TEST_CASE("distance, defect and cheeger") {
  std::string sol = write_temp("cli_sol2.json", R"({"n": 3, "perms": [[2, 3, 1], [3, 1, 2]]})");
  std::string far = write_temp("cli_far2.json", R"({"n": 3, "perms": [[2, 1, 3], [3, 2, 1]]})");
  Run zero = run({"distance", "--preset", "comm:2", "--tuple", sol});
  CHECK(zero.code == 0);
  CHECK(zero.out.find("distance: 0/1 (0)") != std::string::npos);
  Run two_thirds = run({"distance", "--preset", "comm:2", "--tuple", far, "--flexible", "--max-m", "5"});
  CHECK(two_thirds.out.find("distance: 2/3 (0.666666666667)") != std::string::npos);
  CHECK(two_thirds.out.find("flexible distance") != std::string::npos);
  CHECK(run({"--cap-states", "10", "distance", "--preset", "comm:2", "--tuple", far}).code == 3);

  Run defect = run({"defect", "--preset", "comm:2", "--tuple", far});
  CHECK(defect.out.find("local defect: 1/1") != std::string::npos);
  Run cheeger = run({"cheeger", "--tuple", far});
  CHECK(cheeger.out.find("cheeger constant: 1/1") != std::string::npos);

  std::string report = (std::filesystem::temp_directory_path() / "cli_distance.json").string();
  CHECK(run({"--out", report, "distance", "--preset", "comm:2", "--tuple", far}).code == 0);
  std::string json = slurp(report);
  CHECK(json.find("\"seed\"") != std::string::npos);
  CHECK(json.find("\"caps\"") != std::string::npos);
}

TEST_CASE("sweeps are deterministic") {
  Run a = run({"sweep", "--preset", "comm:2", "--n-min", "2", "--n-max", "4", "--ball", "2"});
  Run b = run({"sweep", "--preset", "comm:2", "--n-min", "2", "--n-max", "4", "--ball", "2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("n,epsilon,", 0) == 0);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 7);
  CHECK(a.out.find(",-") == std::string::npos);
  Run empty = run({"sweep", "--preset", "comm:2", "--n-min", "5", "--n-max", "4"});
  CHECK(std::count(empty.out.begin(), empty.out.end(), '\n') == 1);
  Run sas1 = run({"sweep", "--kind", "sas-error", "--preset", "comm:2", "--n-max", "3", "--trials", "20"});
  Run sas2 = run({"sweep", "--kind", "sas-error", "--preset", "comm:2", "--n-max", "3", "--trials", "20"});
  CHECK(sas1.out == sas2.out);
  CHECK(run({"sweep", "--kind", "nope", "--preset", "comm:2"}).code == 2);
}

TEST_CASE("verify, presets and conversion") {
  CHECK(run({"verify", "sas-defect", "--n-max", "4", "--samples", "200"}).code == 0);
  CHECK(run({"verify", "census"}).code == 0);
  CHECK(run({"verify", "inverseless"}).code == 0);
  CHECK(run({"verify", "transfer", "--n-max", "3", "--samples", "50"}).code == 0);
  CHECK(run({"verify", "diagonal", "--n-max", "4"}).code == 0);
  CHECK(run({"verify", "inclusion", "--n-max", "4", "--samples", "3"}).code == 0);
  CHECK(run({"verify", "bogus"}).code == 2);

  Run list = run({"presets"});
  CHECK(list.out.find("abels:p") != std::string::npos);
  Run sl = run({"presets", "sl:3"});
  CHECK(sl.out.find("s12 s21^-1 s12") != std::string::npos);
  CHECK(run({"presets", "nope"}).code == 2);
  Run conv = run({"convert-inverseless", "--preset", "comm:2"});
  CHECK(conv.out == "letters X Y X_bar Y_bar\nX Y = Y X\nX X_bar = 1\nY Y_bar = 1\n");

  std::string dir = std::string(PERMTEST_FIXTURE_DIR) + "/z2_pair_swapped";
  CHECK(run({"transfer-check", "--source", dir + "/source.eq", "--target", dir + "/target.eq", "--lambda1",
             dir + "/lambda1.json", "--lambda2", dir + "/lambda2.json", "--corrections", dir + "/corrections.json",
             "--n-max", "3", "--samples", "50"})
            .code == 0);
  CHECK(run({"transfer-check", "--fixture", "z2", "--n-max", "3", "--samples", "20"}).code == 0);
  CHECK(run({"transfer-check"}).code == 2);
}
