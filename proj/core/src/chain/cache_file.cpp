#include "dreidel/chain/cache_file.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"

#include "dreidel/error.hpp"

namespace dreidel {

using nlohmann::json;

std::string to_json_line(const SpinRecord& record) {
  nlohmann::ordered_json j;
  j["game"] = std::string(to_string(record.game));
  j["a"] = record.state.a;
  j["p"] = record.state.p;
  j["b"] = record.state.b;
  if (record.mode == SolveMode::kExact) {
    j["value"] = record.value.exact().to_string();
    j["mode"] = std::string(to_string(record.mode));
  } else {
    j["value"] = record.value.to_string(record.digits);
    j["mode"] = std::string(to_string(record.mode));
    j["digits"] = record.digits;
    if (record.error_bound) j["error_bound"] = record.error_bound->to_string(6);
  }
  return j.dump();
}

SpinRecord parse_json_line(std::string_view line, long precision_bits) {
  try {
    const json j = json::parse(line);
    SpinRecord r;
    const auto game = parse_game(j.at("game").get<std::string>());
    const auto mode = parse_solve_mode(j.at("mode").get<std::string>());
    if (!game || !mode) throw Error(ErrorCode::kParse, "unknown game or mode");
    r.game = *game;
    r.mode = *mode;
    r.state = {j.at("a").get<int>(), j.at("p").get<int>(), j.at("b").get<int>()};
    if (!r.state.is_valid()) throw Error(ErrorCode::kParse, "negative nut count");
    const std::string value = j.at("value").get<std::string>();
    if (r.mode == SolveMode::kExact) {
      r.value = Rational::parse(value);
    } else {
      r.value = BigFloat::parse(value, precision_bits);
      r.digits = j.value("digits", 0);
      if (j.contains("error_bound")) {
        r.error_bound = BigFloat::parse(j.at("error_bound").get<std::string>(), precision_bits);
      }
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad cache record: ") + e.what());
  }
}

std::vector<SpinRecord> table_records(const SpinTable& table, int digits) {
  std::vector<SpinRecord> out;
  out.reserve(table.states.size());
  for (std::size_t i = 0; i < table.states.size(); ++i) {
    SpinRecord r;
    r.game = table.game;
    r.state = table.states[i];
    r.mode = table.mode;
    r.value = table.values[i];
    if (table.mode == SolveMode::kHighPrecision) {
      r.digits = digits;
      r.error_bound = table.error_bound;
    }
    out.push_back(std::move(r));
  }
  return out;
}

void write_records(std::ostream& out, const std::vector<SpinRecord>& records) {
  for (const auto& r : records) out << to_json_line(r) << '\n';
}

std::vector<SpinRecord> read_records(std::istream& in, long precision_bits) {
  std::vector<SpinRecord> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_json_line(line, precision_bits));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::size_t load_cache_file(const std::string& path, SpinSolver& solver) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read cache file " + path);
  const auto records = read_records(in, solver.options().precision_bits);
  for (const auto& r : records) solver.preload(r);
  return records.size();
}

void append_cache_file(const std::string& path, const std::vector<SpinRecord>& records) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error(ErrorCode::kIo, "cannot write cache file " + path);
  write_records(out, records);
}

}  // namespace dreidel
