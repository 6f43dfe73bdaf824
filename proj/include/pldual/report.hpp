#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pldual {

inline constexpr const char* kToolVersion = "0.1.0";

// Empty cell, integer, real, text or flag.
using Cell = std::variant<std::monostate, long, double, std::string, bool>;

struct CheckOutcome {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string timestamp;
  std::string tool_version = kToolVersion;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<CheckOutcome> checks;

  void add_row(std::vector<Cell> row);
  bool all_passed() const;
};

// %.17g, with "nan", "inf", "-inf" spelled out.
std::string format_real(double v);

// RFC 4180 style: header line, then one line per row; fields containing
// comma, quote or newline are quoted with doubled quotes.
void write_csv(std::ostream& os, const RunReport& report);

// One JSON object per line, keys in column order; reals keep 17 digits.
void write_json(std::ostream& os, const RunReport& report);

// Command name, parameters, timestamp, version and the check summary. Goes
// to the diagnostics stream so data output stays byte-reproducible.
void write_metadata(std::ostream& os, const RunReport& report);

std::string utc_timestamp();

}  // namespace pldual
