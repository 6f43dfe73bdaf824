#include "pldual/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <json.hpp>
#include <ostream>

#include "pldual/errors.hpp"

namespace pldual {
namespace {

std::string cell_text(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, c);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string json_value(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "null"; }
    std::string operator()(long v) const { return std::to_string(v); }
    std::string operator()(double v) const {
      // JSON has no NaN/Inf; emit them as strings.
      if (!std::isfinite(v)) return nlohmann::json(format_real(v)).dump();
      return format_real(v);
    }
    std::string operator()(const std::string& v) const { return nlohmann::json(v).dump(); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, c);
}

// Tolerances are round decimal numbers; print them the way they were written.
std::string short_real(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

void RunReport::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    fail(ErrorKind::domain, "report row width does not match the header");
  rows.push_back(std::move(row));
}

bool RunReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const RunReport& report) {
  for (std::size_t i = 0; i < report.columns.size(); ++i)
    os << (i ? "," : "") << csv_field(report.columns[i]);
  os << "\r\n";
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(row[i]));
    os << "\r\n";
  }
}

void write_json(std::ostream& os, const RunReport& report) {
  for (const auto& row : report.rows) {
    os << '{';
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << nlohmann::json(report.columns[i]).dump() << ':' << json_value(row[i]);
    }
    os << "}\n";
  }
}

void write_metadata(std::ostream& os, const RunReport& report) {
  os << "# pldual " << report.tool_version << " " << report.command;
  for (const auto& [k, v] : report.parameters) os << " " << k << "=" << v;
  os << "\n# timestamp " << report.timestamp << "\n";
  if (!report.checks.empty()) {
    std::size_t passed = 0;
    for (const auto& c : report.checks) {
      os << "# " << (c.passed ? "PASS" : "FAIL") << " " << c.name << " measured="
         << format_real(c.measured) << " tolerance=" << short_real(c.tolerance) << "\n";
      passed += c.passed ? 1 : 0;
    }
    os << "# " << passed << "/" << report.checks.size() << " checks passed\n";
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace pldual
