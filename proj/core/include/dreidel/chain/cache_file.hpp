#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dreidel/chain/spin_table.hpp"

namespace dreidel {

// One JSON object per line:
//   {"game":"simplified","a":1,"p":2,"b":3,"value":"5/2","mode":"exact"}
// High-precision records add "digits" and "error_bound" and store the value
// as a decimal string with that many significant digits.

std::string to_json_line(const SpinRecord& record);
/// Throws kParse on malformed input.
SpinRecord parse_json_line(std::string_view line, long precision_bits = BigFloat::kDefaultPrecision);

std::vector<SpinRecord> table_records(const SpinTable& table, int digits = 30);

void write_records(std::ostream& out, const std::vector<SpinRecord>& records);
/// Skips blank lines. Throws kParse with the offending line number.
std::vector<SpinRecord> read_records(std::istream& in,
                                     long precision_bits = BigFloat::kDefaultPrecision);

/// Loads a JSON-lines file into the solver. Throws kIo if unreadable.
std::size_t load_cache_file(const std::string& path, SpinSolver& solver);
/// Appends records to a JSON-lines file. Throws kIo if unwritable.
void append_cache_file(const std::string& path, const std::vector<SpinRecord>& records);

}  // namespace dreidel
