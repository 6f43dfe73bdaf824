#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "pldual/cli.hpp"
#include "pldual/errors.hpp"
#include "pldual/report.hpp"

using pldual::run_cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "pldual");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  for (std::string f; std::getline(is, f, ',');) out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("map: hydrogen to oscillator") {
  const Run r = cli({"map", "--d", "3", "--l", "1", "--beta", "-1", "--K", "-1", "--E", "-0.125"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "d,l,beta,K,E,D,L,dual_energy,dual_coupling,dual_exponent,coord_exponent,physical");
  CHECK(ls[1] == "3,1,-1,-1,-0.125,4,2,4,0.5,2,2,true");
}

TEST_CASE("map: singular exponent and the beta = 0 fixed point") {
  const Run bad = cli({"map", "--beta", "-2", "--d", "3"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("singular") != std::string::npos);

  const Run id = cli({"map", "--d", "3", "--l", "0", "--beta", "0", "--K", "1", "--E", "1"});
  REQUIRE(id.code == 0);
  const auto f = fields(lines(id.out)[1]);
  CHECK(f[5] == "3");
  CHECK(f[6] == "0");
  CHECK(f[10] == "1");
}

TEST_CASE("ratio: Wallis rows") {
  const Run r = cli({"ratio", "--system", "wallis", "--n", "1,2,3"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(std::stod(fields(ls[1])[1]) == 4.0 / 3.0);
  CHECK(std::stod(fields(ls[2])[1]) == doctest::Approx(64.0 / 45.0).epsilon(1e-16));
  CHECK(std::stod(fields(ls[3])[1]) == doctest::Approx(256.0 / 175.0).epsilon(1e-16));
}

TEST_CASE("ratio: symmetric value column is swap invariant") {
  const Run a = cli({"ratio", "--system", "symmetric", "--l", "3", "--k", "5"});
  const Run b = cli({"ratio", "--system", "symmetric", "--l", "5", "--k", "3"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  const auto fa = fields(lines(a.out)[1]), fb = fields(lines(b.out)[1]);
  CHECK(fa[2] == fb[2]);
}

TEST_CASE("ratio: hydrogen range extrapolates to 1") {
  const Run r = cli({"--format", "json", "ratio", "--system", "hydrogen", "--range", "2^4..2^20"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 17);
  for (const auto& line : ls) {
    const auto j = nlohmann::json::parse(line);
    CHECK(std::abs(j["extrapolated_limit"].get<double>() - 1.0) <= 1e-8);
    CHECK(j["bridge_rel_error"].get<double>() <= 1e-12);
  }
  CHECK(nlohmann::json::parse(ls.front())["index"] == 16);
  CHECK(r.err.find("PASS ratio_hydrogen(n-1)") != std::string::npos);
}

TEST_CASE("ratio: plain ranges and usage errors") {
  const Run r = cli({"ratio", "--system", "main", "--range", "1..8"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 9);
  CHECK(cli({"ratio", "--system", "nope"}).code == 2);
  CHECK(cli({"ratio", "--range", "5..1"}).code == 2);
  CHECK(cli({"ratio", "--range", "2^3..9"}).code == 2);
  CHECK(cli({"ratio", "--range", "x..y"}).code == 2);
  CHECK(cli({"ratio", "--n", "1,2", "--range", "1..3"}).code == 2);
  CHECK(cli({"ratio", "--system", "wallis", "--n", "0"}).code == 2);
  CHECK(cli({"--format", "xml", "ratio"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"bogus"}).code == 2);
}

TEST_CASE("variational reports") {
  const Run h = cli({"variational", "--system", "hydrogen", "--l", "0", "--d", "3"});
  REQUIRE(h.code == 0);
  auto f = fields(lines(h.out)[1]);
  CHECK(std::stod(f[2]) == doctest::Approx(-0.424413).epsilon(1e-6));
  CHECK(std::stod(f[4]) <= 1e-8);

  const Run o = cli({"variational", "--system", "oscillator", "--L", "0"});
  REQUIRE(o.code == 0);
  f = fields(lines(o.out)[1]);
  CHECK(std::stod(f[2]) == doctest::Approx(2.170803).epsilon(1e-6));
  CHECK(std::stod(f[5]) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));

  const Run h4 = cli({"variational", "--system", "hydrogen", "--l", "0", "--d", "4"});
  REQUIRE(h4.code == 0);
  f = fields(lines(h4.out)[1]);
  CHECK(std::stod(f[9]) == doctest::Approx(0.88357293382212934832).epsilon(1e-14));

  CHECK(cli({"variational", "--system", "hydrogen", "--d", "2"}).code == 2);
}

TEST_CASE("spectrum and verify") {
  const Run s = cli({"spectrum", "--system", "oscillator", "--L", "1", "--levels", "3"});
  REQUIRE(s.code == 0);
  CHECK(lines(s.out).size() == 4);
  const Run d = cli({"spectrum", "--system", "dual", "--l", "0", "--levels", "2"});
  CHECK(d.code == 0);
  CHECK(cli({"spectrum", "--levels", "0"}).code == 2);

  const Run v = cli({"verify", "--suite", "identities"});
  CHECK(v.code == 0);
  for (const auto& line : lines(v.out)) CHECK(line.find("false") == std::string::npos);
  CHECK(cli({"verify", "--suite", "nothing"}).code == 2);
}

TEST_CASE("deterministic output and kernel selection") {
  const std::vector<std::string> args{"ratio", "--system", "wallis", "--range", "2^1..2^16"};
  const Run a = cli(args);
  auto scalar_args = args;
  scalar_args.insert(scalar_args.begin(), {"--kernels", "scalar"});
  const Run b = cli(scalar_args);
  const Run c = cli(args);
  CHECK(a.out == c.out);
  // Products may differ in the last ulp across kernels; the shape is fixed.
  CHECK(lines(a.out).size() == lines(b.out).size());
  CHECK(b.err.find("kernels=scalar") != std::string::npos);
  cli({"--kernels", "auto", "map"});
}

TEST_CASE("help goes to stdout with status 0") {
  const Run h = cli({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("ratio") != std::string::npos);
}

TEST_CASE("report writers") {
  pldual::RunReport r;
  r.command = "t";
  r.columns = {"a", "b", "c"};
  r.add_row({std::string("x,\"y\""), 1.0 / 3.0, std::monostate{}});
  r.add_row({true, 5L, NAN});
  std::ostringstream csv, json;
  pldual::write_csv(csv, r);
  pldual::write_json(json, r);
  CHECK(csv.str() == "a,b,c\r\n\"x,\"\"y\"\"\",0.33333333333333331,\r\ntrue,5,nan\r\n");
  const auto js = lines(json.str());
  REQUIRE(js.size() == 2);
  CHECK(js[0] == R"({"a":"x,\"y\"","b":0.33333333333333331,"c":null})");
  CHECK(js[1] == R"({"a":true,"b":5,"c":"nan"})");
  CHECK_THROWS_AS(r.add_row({1L}), pldual::Error);
  CHECK(r.all_passed());
  r.checks.push_back({"x", 2.0, 1.0, false});
  CHECK_FALSE(r.all_passed());
}
