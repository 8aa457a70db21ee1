#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "dreidel");
  std::ostringstream out;
  std::ostringstream err;
  const int code = dreidel::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool single_trailing_newline(const std::string& s) {
  return !s.empty() && s.back() == '\n' && (s.size() < 2 || s[s.size() - 2] != '\n');
}

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("documented examples") {
  CHECK(run_cli({"solve", "--game", "simplified", "--a", "2", "--p", "2", "--b", "2", "--mode", "exact"}).out ==
        "3\n");
  CHECK(run_cli({"duration", "--nuts", "10", "--seconds-per-spin", "10"}).out == "28.10\n");
  CHECK(run_cli({"solve", "--game", "gambler", "--M", "5", "--N", "5", "--a", "0"}).out == "25\n");
}

TEST_CASE("solve output formats") {
  CHECK(run_cli({"solve", "--game", "simplified", "--a", "1", "--p", "1", "--b", "4"}).out == "33/16\n");
  CHECK(run_cli({"solve", "--game", "full", "--a", "1", "--b", "1", "--mode", "exact"}).out == "12/5\n");
  const Result hp = run_cli({"solve", "--game", "full", "--a", "1", "--b", "1", "--digits", "12"});
  CHECK(hp.code == 0);
  CHECK(hp.out == "2.40000000000\n");
}

TEST_CASE("table formats") {
  const Result csv = run_cli({"table", "--game", "simplified", "--total", "6", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("a,p,b,value\n", 0) == 0);
  CHECK(csv.out.find("2,1,3,57/16\n") != std::string::npos);
  CHECK(single_trailing_newline(csv.out));
  const Result json = run_cli({"table", "--game", "full", "--total", "5", "--format", "json"});
  std::istringstream lines(json.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.at("game") == "full");
    CHECK(j.at("mode") == "hiprec");
    ++count;
  }
  CHECK(count == 10);
}

TEST_CASE("cache round trip avoids recomputation") {
  const std::string path = temp_path("dreidel_cli_cache.jsonl");
  {
    const Result table = run_cli({"table", "--game", "simplified", "--total", "8", "--format", "json"});
    std::ofstream(path) << table.out;
  }
  for (int a = 1; a <= 6; ++a) {
    const std::string as = std::to_string(a);
    const std::string bs = std::to_string(6 - a);
    const Result cached = run_cli({"--cache", path, "solve", "--game", "simplified", "--a", as, "--b", bs});
    const Result fresh = run_cli({"solve", "--game", "simplified", "--a", as, "--b", bs});
    CHECK(cached.code == 0);
    CHECK(cached.out == fresh.out);
  }
  // A doctored record is served verbatim, so answers come from the cache.
  {
    std::ofstream(path) << R"({"game":"simplified","a":2,"p":2,"b":4,"value":"999","mode":"exact"})" << '\n';
    CHECK(run_cli({"--cache", path, "solve", "--game", "simplified", "--a", "2", "--b", "4"}).out == "999\n");
  }
  // Solving a missing total appends its table.
  std::filesystem::remove(path);
  const Result fresh = run_cli({"solve", "--game", "simplified", "--a", "3", "--b", "3"});
  CHECK(run_cli({"--cache", path, "solve", "--game", "simplified", "--a", "3", "--b", "3"}).out == fresh.out);
  std::ifstream appended(path);
  std::string first;
  CHECK(static_cast<bool>(std::getline(appended, first)));
  std::filesystem::remove(path);
}

TEST_CASE("verification subcommands") {
  const Result key = run_cli({"verify-key", "--max-sum", "10"});
  CHECK(key.code == 0);
  CHECK(key.out.find("45 identities, 0 violations") != std::string::npos);
  const Result key_json = run_cli({"verify-key", "--max-sum", "6", "--format", "json"});
  const auto j = nlohmann::json::parse(key_json.out);
  CHECK(j.at("passed") == true);
  CHECK(j.at("checked") == 15);

  const Result constants = run_cli({"derive-constants"});
  CHECK(constants.out.find("c3 = 12/19\n") != std::string::npos);
  CHECK(constants.out.find("s0 = c2 - 18/19\n") != std::string::npos);
  CHECK(constants.out.find("c1 = c2 + 2/19\n") != std::string::npos);
  const auto cj = nlohmann::json::parse(run_cli({"derive-constants", "--format", "json"}).out);
  CHECK(cj.at("s2") == "4/19");

  const Result conj = run_cli({"verify-conjecture-key"});
  CHECK(conj.code == 0);
  CHECK(conj.out.find("cases agree\n") != std::string::npos);

  const Result gamblers = run_cli({"gamblers", "--M", "4", "--N", "2", "--a", "1", "--verify"});
  CHECK(gamblers.code == 0);
  CHECK(gamblers.out.rfind("9\n", 0) == 0);
}

TEST_CASE("fit, error and simulate outputs") {
  const Result fit = run_cli({"fit", "--game", "simplified", "--min", "8", "--max", "10", "--format", "json"});
  CHECK(fit.code == 0);
  const auto fj = nlohmann::json::parse(fit.out);
  CHECK(fj.at("grid").at("a_min") == 8);
  const Result err = run_cli({"error", "--game", "full", "--a", "9", "--b", "9", "--format", "json"});
  const auto ej = nlohmann::json::parse(err.out);
  CHECK(ej.at("value").get<std::string>().rfind("168.61", 0) == 0);
  const Result sim = run_cli({"simulate", "--game", "simplified", "--a", "2", "--p", "2", "--b", "2",
                              "--trials", "500", "--seed", "11"});
  CHECK(sim.code == 0);
  const auto sj = nlohmann::json::parse(sim.out);
  CHECK(sj.at("trials") == 500);
  CHECK(run_cli({"simulate", "--game", "simplified", "--a", "2", "--p", "2", "--b", "2", "--trials", "500",
                 "--seed", "11"})
            .out == sim.out);
  const Result gsim = run_cli({"simulate", "--game", "gambler", "--M", "3", "--N", "3", "--a", "0",
                               "--trials", "100", "--seed", "1"});
  CHECK(gsim.code == 0);
}

TEST_CASE("every output ends with one newline") {
  const std::vector<std::vector<std::string>> commands{
      {"solve", "--game", "simplified", "--a", "3", "--b", "4"},
      {"table", "--game", "simplified", "--total", "4"},
      {"verify-key", "--max-sum", "5"},
      {"derive-constants"},
      {"verify-conjecture-key"},
      {"fit", "--game", "simplified", "--min", "4", "--max", "5"},
      {"fit", "--game", "simplified", "--min", "4", "--max", "5", "--format", "csv"},
      {"error", "--game", "simplified", "--a", "5", "--b", "5"},
      {"simulate", "--game", "full", "--a", "2", "--p", "2", "--b", "2", "--trials", "10", "--seed", "1"},
      {"duration", "--nuts", "3", "--seconds-per-spin", "5"},
      {"gamblers", "--M", "3", "--N", "3", "--a", "1"}};
  for (const auto& c : commands) {
    const Result r = run_cli(c);
    CAPTURE(c.front());
    CHECK(r.code == 0);
    CHECK(single_trailing_newline(r.out));
  }
}

TEST_CASE("usage errors exit with code 2") {
  const std::vector<std::vector<std::string>> bad{
      {},
      {"solve", "--game", "simplified", "--a", "1", "--b", "2", "--bogus"},
      {"solve", "--game", "chess", "--a", "1", "--b", "2"},
      {"solve", "--game", "simplified", "--a", "1"},
      {"solve", "--game", "gambler", "--a", "0"},
      {"solve", "--game", "gambler", "--M", "2", "--N", "2", "--a", "5"},
      {"solve", "--game", "simplified", "--a", "-1", "--b", "2"},
      {"table", "--game", "simplified", "--total", "1"},
      {"fit", "--game", "full", "--min", "5", "--max", "4"},
      {"simulate", "--game", "simplified", "--a", "0", "--p", "2", "--b", "2", "--trials", "10", "--seed", "1"},
      {"simulate", "--game", "simplified", "--a", "2", "--p", "2", "--b", "2", "--trials", "0", "--seed", "1"},
      {"duration", "--nuts", "1", "--seconds-per-spin", "10"},
      {"derive-constants", "extra"}};
  for (const auto& args : bad) {
    const Result r = run_cli(args);
    CAPTURE(args.size());
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("unreadable cache and bad precision are usage errors") {
  const std::string path = temp_path("dreidel_cli_bad_cache.jsonl");
  std::ofstream(path) << "{broken\n";
  CHECK(run_cli({"--cache", path, "solve", "--game", "simplified", "--a", "1", "--b", "1"}).code == 2);
  std::filesystem::remove(path);
  setenv("DREIDEL_PRECISION_BITS", "32", 1);
  CHECK(run_cli({"solve", "--game", "full", "--a", "1", "--b", "1"}).code == 2);
  setenv("DREIDEL_PRECISION_BITS", "512", 1);
  const Result wide = run_cli({"solve", "--game", "full", "--a", "2", "--b", "3", "--digits", "100"});
  CHECK(wide.code == 0);
  unsetenv("DREIDEL_PRECISION_BITS");
}

TEST_CASE("help exits cleanly") {
  const Result r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify-key") != std::string::npos);
}

}  // TEST_SUITE
