#include <cmath>

#include "doctest.h"
#include "oracle/crossing.hpp"
#include "support.hpp"
#include "wavexfer/error.hpp"
#include "wavexfer/metrics.hpp"

using namespace wavexfer;

namespace {

constexpr auto kLower = MetricDirection::lower_is_better;
constexpr auto kHigher = MetricDirection::higher_is_better;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

std::vector<CurvePoint> random_points(testsupport::Rng& rng, bool monotone, bool lower) {
  std::uniform_int_distribution<std::size_t> count(2, 12);
  std::uniform_real_distribution<double> step(0.1, 5.0), metric(0.0, 10.0);
  std::vector<CurvePoint> pts;
  double x = std::uniform_real_distribution<double>(0.0, 3.0)(rng);
  double y = metric(rng);
  for (std::size_t i = 0, n = count(rng); i < n; ++i) {
    pts.push_back({x, y});
    x += step(rng);
    if (monotone) {
      y += (lower ? -1.0 : 1.0) * std::uniform_real_distribution<double>(0.0, 2.0)(rng);
    } else {
      y = metric(rng);
    }
  }
  return pts;
}

}  // namespace

TEST_CASE("first crossing examples") {
  const TrainingCurve c({{0, 10}, {100, 2}}, kLower);
  CHECK(first_crossing(c, 6.0) == 50.0);
  CHECK(first_crossing(c, 10.0) == 0.0);
  CHECK(first_crossing(c, 2.0) == 100.0);
  CHECK(code_of([] { first_crossing(TrainingCurve({{0, 10}, {100, 8}}, kLower), 2.0); }) ==
        ErrorCode::TargetNotReached);

  const TrainingCurve acc({{10, 0.1}, {20, 0.5}, {40, 0.9}}, kHigher);
  CHECK(first_crossing(acc, 0.7) == doctest::Approx(30.0).epsilon(1e-15));
  CHECK(first_crossing(acc, 0.5) == 20.0);

  // Dips below the target, rises again, crosses later: the first dip counts.
  const TrainingCurve bumpy({{0, 5}, {10, 3}, {20, 7}, {30, 1}}, kLower);
  CHECK(std::abs(first_crossing(bumpy, 4.0) - 5.0) <= 1e-12);
  CHECK(std::abs(first_crossing(bumpy, 2.0) - (20.0 + 10.0 * 5.0 / 6.0)) <= 1e-12);
}

TEST_CASE("first crossing agrees with the segment scan") {
  testsupport::Rng rng(61);
  std::uniform_real_distribution<double> target(-1.0, 11.0);
  int reached = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const bool lower = trial % 2 == 0;
    const auto pts = random_points(rng, false, lower);
    const TrainingCurve c(pts, lower ? kLower : kHigher);
    const double m = target(rng);
    const auto expected = oracle::scan_crossing(pts, lower, m);
    if (expected) {
      ++reached;
      CHECK(std::abs(first_crossing(c, m) - *expected) <= 1e-12 * std::max(1.0, *expected));
    } else {
      CHECK(code_of([&] { first_crossing(c, m); }) == ErrorCode::TargetNotReached);
    }
  }
  CHECK(reached > 500);
}

TEST_CASE("crossing is monotone in the target for monotone curves") {
  testsupport::Rng rng(62);
  for (int trial = 0; trial < 500; ++trial) {
    const auto pts = random_points(rng, true, true);
    const TrainingCurve c(pts, kLower);
    const double hi = pts.front().metric, lo = pts.back().metric;
    double prev = -1.0;
    for (int k = 0; k <= 10; ++k) {
      const double m = k == 10 ? lo : hi - (hi - lo) * k / 10.0;
      const double x = first_crossing(c, m);
      CHECK(x >= prev);
      prev = x;
    }
  }
}

TEST_CASE("flops saving ratio") {
  const TrainingCurve scratch({{0, 10}, {200, 0}}, kLower);  // reaches 5 at 100
  const TrainingCurve method({{0, 10}, {80, 0}}, kLower);    // reaches 5 at 40
  CHECK(std::abs(flops_saving_ratio(scratch, method, 5.0) - 0.6) <= 1e-12);
  CHECK(flops_saving_ratio(scratch, scratch, 5.0) == 0.0);
  CHECK(std::abs(flops_saving_ratio(method, scratch, 5.0) - (-1.5)) <= 1e-12);
  CHECK(code_of([&] { flops_saving_ratio(scratch, method, -1.0); }) == ErrorCode::TargetNotReached);

  const TrainingCurve instant({{0, 1}, {10, 0}}, kLower);
  CHECK(flops_saving_ratio(instant, instant, 5.0) == 0.0);
  CHECK(code_of([&] { flops_saving_ratio(instant, method, 5.0); }) == ErrorCode::InvalidCurve);
}

TEST_CASE("ratio is invariant under common flops scaling") {
  testsupport::Rng rng(63);
  int compared = 0;
  for (int trial = 0; trial < 500; ++trial) {
    auto a = random_points(rng, true, true);
    auto b = random_points(rng, true, true);
    const double m = 5.0;
    if (!oracle::scan_crossing(a, true, m) || !oracle::scan_crossing(b, true, m)) continue;
    if (*oracle::scan_crossing(a, true, m) == 0.0) continue;
    const double r = flops_saving_ratio(TrainingCurve(a, kLower), TrainingCurve(b, kLower), m);
    const double scale = std::ldexp(1.0, static_cast<int>(rng() % 40)) * 3.0;
    for (auto& p : a) p.flops *= scale;
    for (auto& p : b) p.flops *= scale;
    const double rs = flops_saving_ratio(TrainingCurve(a, kLower), TrainingCurve(b, kLower), m);
    CHECK(std::abs(r - rs) <= 1e-12 * std::max(1.0, std::abs(r)));
    ++compared;
  }
  CHECK(compared > 50);
}

TEST_CASE("curve validation") {
  CHECK(code_of([] { TrainingCurve({{0, 1}}, kLower); }) == ErrorCode::InvalidCurve);
  CHECK(code_of([] { TrainingCurve({{0, 1}, {0, 2}}, kLower); }) == ErrorCode::InvalidCurve);
  CHECK(code_of([] { TrainingCurve({{5, 1}, {2, 2}}, kLower); }) == ErrorCode::InvalidCurve);
  CHECK(code_of([] { TrainingCurve({{0, NAN}, {1, 2}}, kLower); }) == ErrorCode::InvalidCurve);
  CHECK(code_of([] { TrainingCurve({{0, 1}, {INFINITY, 2}}, kLower); }) == ErrorCode::InvalidCurve);
  CHECK(parse_metric_direction("higher") == kHigher);
  CHECK(code_of([] { parse_metric_direction("up"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("curve CSV") {
  auto pts = parse_curve_csv("flops,metric\n0,10\n100,2\n");
  REQUIRE(pts.size() == 2);
  CHECK(pts[1].flops == 100.0);
  CHECK(pts[1].metric == 2.0);

  pts = parse_curve_csv("\xEF\xBB\xBF" "1e3, 0.5\r\n\n2.5e3,+0.25\r\n");
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].flops == 1000.0);
  CHECK(pts[1].metric == 0.25);

  CHECK(parse_curve_csv("").empty());
  CHECK(code_of([] { parse_curve_csv("0,1\n1;2\n"); }) == ErrorCode::InvalidCurve);
  CHECK(code_of([] { parse_curve_csv("0,1\nflops,metric\n"); }) == ErrorCode::InvalidCurve);
  CHECK(code_of([] { parse_curve_csv("0,1,2\n"); }) == ErrorCode::InvalidCurve);
  CHECK(code_of([] { parse_curve_csv("a,b\nc,d\n"); }) == ErrorCode::InvalidCurve);
  try {
    parse_curve_csv("x,y\n1,2\n3,oops\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}
