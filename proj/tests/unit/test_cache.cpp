#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "dreidel/chain/cache_file.hpp"
#include "dreidel/error.hpp"

using namespace dreidel;

TEST_SUITE("cache") {

TEST_CASE("exact record line format") {
  SpinRecord r;
  r.game = Game::kSimplified;
  r.state = {1, 2, 3};
  r.mode = SolveMode::kExact;
  r.value = Rational(5, 2);
  CHECK(to_json_line(r) == R"({"game":"simplified","a":1,"p":2,"b":3,"value":"5/2","mode":"exact"})");
  const SpinRecord back = parse_json_line(to_json_line(r));
  CHECK(back.game == r.game);
  CHECK(back.state == r.state);
  CHECK(back.value == r.value);
  CHECK(back.mode == SolveMode::kExact);
}

TEST_CASE("high-precision records carry digits and error bound") {
  const auto table = solve_table(Game::kFull, 7, SolveMode::kHighPrecision);
  const auto records = table_records(table, 40);
  REQUIRE(records.size() == table.states.size());
  for (const auto& r : records) {
    const auto j = nlohmann::json::parse(to_json_line(r));
    CHECK(j.at("mode") == "hiprec");
    CHECK(j.at("digits") == 40);
    CHECK(j.at("error_bound").is_string());
    const SpinRecord back = parse_json_line(to_json_line(r));
    CHECK(back.value.to_string(40) == r.value.to_string(40));
    REQUIRE(back.error_bound);
  }
}

TEST_CASE("write and read round trip") {
  const auto table = solve_table(Game::kSimplified, 9, SolveMode::kExact);
  std::stringstream buffer;
  write_records(buffer, table_records(table));
  const auto records = read_records(buffer);
  REQUIRE(records.size() == table.states.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].state == table.states[i]);
    CHECK(records[i].value == table.values[i]);
  }
}

TEST_CASE("malformed input reports the line number") {
  std::stringstream in;
  in << R"({"game":"simplified","a":1,"p":2,"b":3,"value":"5/2","mode":"exact"})" << '\n'
     << '\n'
     << R"({"game":"simplified","a":1,"p":2,"value":"5/2","mode":"exact"})" << '\n';
  try {
    read_records(in);
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  for (const char* bad : {"not json", R"({"game":"chess","a":1,"p":2,"b":3,"value":"1","mode":"exact"})",
                          R"({"game":"full","a":1,"p":2,"b":3,"value":"x","mode":"exact"})",
                          R"({"game":"full","a":1,"p":2,"b":3,"value":"1","mode":"fast"})"}) {
    CHECK_THROWS_AS(parse_json_line(bad), Error);
  }
}

TEST_CASE("cache file preloads the solver") {
  const auto path = std::filesystem::temp_directory_path() / "dreidel_cache_test.jsonl";
  std::filesystem::remove(path);
  append_cache_file(path.string(), table_records(solve_table(Game::kSimplified, 6, SolveMode::kExact)));
  SpinSolver solver;
  CHECK(load_cache_file(path.string(), solver) == 15);
  CHECK(solver.expected_spins(Game::kSimplified, {2, 1, 3}, SolveMode::kExact) == Number(Rational(57, 16)));
  CHECK(solver.solves_performed() == 0);
  std::filesystem::remove(path);
  SpinSolver other;
  CHECK_THROWS_AS(load_cache_file(path.string(), other), Error);
}

}  // TEST_SUITE
