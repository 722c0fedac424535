#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace utilscope {

// Minimal strict CSV: comma separated, no quoting, one header row.
// Lines starting with '#' are comments and are skipped on read.
struct CsvRow {
  std::size_t line = 0;  // 1-based line number in the file
  std::vector<std::string> cells;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<CsvRow> rows;
};

// Reads and validates against an expected header (exact match, in order).
// Rows with the wrong column count raise line-numbered errors.
CsvTable read_csv(const std::filesystem::path& path,
                  const std::vector<std::string>& expected_header);

// Parses one cell, naming the line and column on failure.
double parse_double_cell(const std::string& cell, std::size_t line,
                         const std::string& column);
std::int64_t parse_int_cell(const std::string& cell, std::size_t line,
                            const std::string& column);

// Shortest round-trip decimal form (data meant to be re-ingested).
std::string format_full(double value);
// Six significant digits (human-facing report values).
std::string format_g6(double value);

}  // namespace utilscope
