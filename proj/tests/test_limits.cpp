#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <vector>

#include "pldual/gamma_kit.hpp"
#include "pldual/limits.hpp"
#include "support.hpp"

using namespace pldual;
using testing::error_kind;
using testing::Gen;
using testing::rel;

namespace {
constexpr double pi = std::numbers::pi;
constexpr double ulp8 = 8 * 2.220446049250313e-16;  // squared Gamma ratio times rational prefactor
}

TEST_CASE("ratio values") {
  CHECK(rel(ratio_hydrogen(0, 3), 0.8488263631567751241) <= ulp8);
  CHECK(rel(ratio_hydrogen(1, 3), 0.90541478736722679904) <= ulp8);
  CHECK(rel(ratio_hydrogen(0, 4), 0.88357293382212934832) <= ulp8);
  // mpmath: 1 - ratio_hydrogen(1e6) and main_sequence(1e6) - 1
  CHECK(rel(1.0 - ratio_hydrogen(1'000'000, 3), 2.499995938e-7) <= 1e-6);
  CHECK(rel(main_sequence(1'000'000) - 1.0, 1.249998203e-7) <= 1e-6);
  const double osc[] = {1.0854018818374015, 1.0638460810704871, 1.0509358530746116, 1.0423520253928958,
                        1.0362367256182097};
  for (int L = 0; L <= 4; ++L) CHECK(rel(ratio_oscillator(L), osc[L]) <= ulp8);
  CHECK(rel(main_sequence(0), 1.085401881837401489) <= ulp8);
  CHECK(rel(symmetric_ratio(0, 1), main_sequence(0)) <= 1e-15);
}

TEST_CASE("ratio domains") {
  CHECK(error_kind([] { ratio_hydrogen(-1, 3); }) == ErrorKind::domain);
  CHECK(error_kind([] { ratio_hydrogen(0, 2); }) == ErrorKind::domain);
  CHECK(error_kind([] { ratio_oscillator(-1); }) == ErrorKind::domain);
  CHECK(error_kind([] { main_sequence(-1); }) == ErrorKind::domain);
  CHECK(error_kind([] { symmetric_ratio(0, 0); }) == ErrorKind::domain);
  CHECK(error_kind([] { symmetric_ratio(-1, 3); }) == ErrorKind::domain);
}

TEST_CASE("ratio_hydrogen against a Boost-built oracle") {
  Gen g(0x11a1);
  for (int i = 0; i < 500; ++i) {
    const int l = static_cast<int>(g.integer(0, 1'000'000));
    const int d = static_cast<int>(g.integer(3, 12));
    const double x = l + 0.5 * (d - 1), y = l + 0.5 * d;
    const double t = boost::math::tgamma_ratio(x, y);
    CAPTURE(l);
    CAPTURE(d);
    CHECK(rel(ratio_hydrogen(l, d), x * x / y * t * t) <= 1e-12);
  }
}

TEST_CASE("finite-n bridges") {
  double bridge = 0.0, recip = 0.0, osc = 0.0, sqr = 0.0;
  for (long n = 1; n <= 10000; ++n) {
    const int l = static_cast<int>(n - 1);
    bridge = std::max(bridge, rel(ratio_hydrogen(l, 3), 2.0 / pi * wallis_partial(n)));
    const double m = main_sequence(l);
    recip = std::max(recip, rel(1.0 / (m * m), 2.0 / pi * wallis_partial(n)));
    osc = std::max(osc, rel(m, ratio_oscillator(2 * l)));
    sqr = std::max(sqr, std::abs(m * m * ratio_hydrogen(l, 3) - 1.0));
  }
  CHECK(bridge <= 1e-12);
  CHECK(recip <= 1e-12);
  CHECK(osc <= 1e-12);
  CHECK(sqr <= 1e-12);
}

TEST_CASE("symmetric ratio") {
  Gen g(0x11a2);
  for (int i = 0; i < 200; ++i) {
    const int l = static_cast<int>(g.integer(0, 100000));
    const int k = static_cast<int>(g.integer(1, 100000));
    CHECK(symmetric_ratio(l, k) == symmetric_ratio(k, l));
    const double s = symmetric_ratio(l, k);
    CHECK(rel(1.0 / (s * s), ratio_hydrogen(l, 2 * k + 1)) <= 1e-12);
  }
  CHECK(symmetric_ratio(3, 5) == symmetric_ratio(5, 3));
  for (int l = 0; l <= 2000; ++l) CHECK(rel(symmetric_ratio(l, 1), main_sequence(l)) <= 1e-15);
}

TEST_CASE("monotone approach to the limits") {
  double h = ratio_hydrogen(0, 3), o = ratio_oscillator(0), m = main_sequence(0);
  for (int l = 1; l <= 20000; ++l) {
    const double h1 = ratio_hydrogen(l, 3), o1 = ratio_oscillator(l), m1 = main_sequence(l);
    REQUIRE(h1 > h);
    REQUIRE(h1 < 1.0);
    REQUIRE(o1 < o);
    REQUIRE(o1 > 1.0);
    REQUIRE(m1 < m);
    h = h1;
    o = o1;
    m = m1;
  }
  for (int l : {100'000, 1'000'000, 100'000'000}) {
    CHECK(ratio_hydrogen(l, 3) > h);
    CHECK(ratio_hydrogen(l, 3) < 1.0);
    CHECK(ratio_oscillator(l) < o);
    CHECK(ratio_oscillator(l) >= 1.0);
    h = ratio_hydrogen(l, 3);
    o = ratio_oscillator(l);
  }
}

TEST_CASE("analyze_sequence on the four ratio limits") {
  const std::vector<long> idx = powers_of_two(4, 20);

  const RatioSequence h = analyze_sequence([](long l) { return ratio_hydrogen(int(l), 3); }, idx);
  CHECK(std::abs(h.limit_estimate - 1.0) <= 1e-8);
  CHECK(h.rate_estimate == doctest::Approx(1.0).epsilon(0.01));
  CHECK(h.rate_constant == doctest::Approx(0.25).epsilon(0.01));
  CHECK(h.extrapolation_method == Extrapolation::richardson);
  CHECK(h.warnings.empty());
  CHECK(h.indices == idx);

  const RatioSequence w = analyze_sequence([](long n) { return wallis_partial(n); }, idx);
  CHECK(std::abs(w.limit_estimate - pi / 2.0) <= 1e-8);
  CHECK(w.rate_estimate == doctest::Approx(1.0).epsilon(0.01));
  CHECK(w.rate_constant == doctest::Approx(pi / 8.0).epsilon(0.01));

  const RatioSequence m = analyze_sequence([](long l) { return main_sequence(int(l)); }, idx);
  CHECK(std::abs(m.limit_estimate - 1.0) <= 1e-8);
  const RatioSequence o = analyze_sequence([](long l) { return ratio_oscillator(int(l)); }, idx);
  CHECK(std::abs(o.limit_estimate - 1.0) <= 1e-8);
}

TEST_CASE("analyze_sequence: synthetic and degenerate inputs") {
  const std::vector<long> idx = powers_of_two(2, 12);
  const RatioSequence q2 = analyze_sequence([](long n) { return 3.0 + 5.0 / (double(n) * n); }, idx);
  CHECK(q2.limit_estimate == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(q2.rate_estimate == doctest::Approx(2.0).epsilon(0.01));
  CHECK(q2.rate_constant == doctest::Approx(5.0).epsilon(0.01));

  const RatioSequence c = analyze_sequence([](long) { return 0.7; }, idx);
  CHECK(c.limit_estimate == 0.7);
  CHECK(std::isnan(c.rate_estimate));
  CHECK_FALSE(c.warnings.empty());
  CHECK(c.extrapolation_method == Extrapolation::none);

  const std::vector<long> lin{1, 2, 3, 4, 5, 6, 7, 8};
  const RatioSequence alt = analyze_sequence([](long n) { return (n % 2 ? 1.0 : -1.0) / double(n); }, lin);
  CHECK_FALSE(alt.warnings.empty());

  const std::vector<long> three{1, 2, 3};
  CHECK(error_kind([&] { analyze_sequence([](long) { return 1.0; }, three); }) == ErrorKind::insufficient_points);
  const std::vector<long> unsorted{1, 3, 2, 4};
  CHECK(error_kind([&] { analyze_sequence([](long) { return 1.0; }, unsorted); }) == ErrorKind::domain);
  const std::vector<long> zero{0, 1, 2, 3};
  CHECK(error_kind([&] { analyze_sequence([](long) { return 1.0; }, zero); }) == ErrorKind::domain);
  CHECK(error_kind([&] { analyze_sequence([](long) { return NAN; }, lin); }) == ErrorKind::domain);
}

TEST_CASE("powers of two") {
  CHECK(powers_of_two(4, 6) == std::vector<long>{16, 32, 64});
  CHECK(error_kind([] { powers_of_two(5, 4); }) == ErrorKind::domain);
  CHECK(to_string(Extrapolation::aitken) == "aitken");
}
