#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracle/dense_dwt.hpp"
#include "oracle/pywt_golden.hpp"
#include "support.hpp"
#include "wavexfer/dwt1d.hpp"
#include "wavexfer/error.hpp"

using namespace wavexfer;

namespace {

double max_diff(std::span<const double> a, std::span<const double> b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double norm_sq(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

double tolerance(Family f) { return f == Family::dmey ? 1e-6 : 1e-8; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

std::size_t even_length(testsupport::Rng& rng, std::size_t lo, std::size_t hi) {
  return 2 * std::uniform_int_distribution<std::size_t>(lo / 2, hi / 2)(rng);
}

}  // namespace

TEST_CASE("haar on small signals") {
  const FilterBank& haar = get_filter_bank(Family::haar);
  const double s2 = std::sqrt(2.0);

  const auto flat = dwt1d(std::vector<double>{1, 1, 1, 1}, haar);
  CHECK(max_diff(flat.approx, std::vector<double>{s2, s2}) < 1e-15);
  CHECK(max_diff(flat.detail, std::vector<double>{0, 0}) < 1e-15);

  const auto ramp = dwt1d(std::vector<double>{1, 2, 3, 4}, haar);
  CHECK(max_diff(ramp.approx, std::vector<double>{3 / s2, 7 / s2}) < 1e-15);
  CHECK(std::abs(ramp.approx[0] - 2.12132) < 1e-5);
  CHECK(std::abs(ramp.approx[1] - 4.94975) < 1e-5);
  for (double d : ramp.detail) CHECK(std::abs(std::abs(d) - 1 / s2) < 1e-15);

  CHECK(max_diff(idwt1d(ramp, haar), std::vector<double>{1, 2, 3, 4}) < 1e-10);

  const auto up = idwt1d(CoeffPair{{1, 1}, {0, 0}}, haar);
  CHECK(max_diff(up, std::vector<double>(4, 1 / s2)) < 1e-15);

  const auto spike = idwt1d(CoeffPair{{0, 0}, {1, 0}}, haar);
  CHECK(std::abs(norm_sq(spike) - 1.0) < 1e-15);
}

TEST_CASE("length errors") {
  const FilterBank& b = get_filter_bank(Family::db2);
  CHECK(code_of([&] { dwt1d(std::vector<double>{}, b); }) == ErrorCode::TooShort);
  CHECK(code_of([&] { dwt1d(std::vector<double>{1, 2, 3}, b); }) == ErrorCode::OddLength);
  CHECK(code_of([&] { idwt1d(CoeffPair{{1, 2}, {1}}, b); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([&] { idwt1d(CoeffPair{}, b); }) == ErrorCode::TooShort);
  CHECK(dwt1d(std::vector<double>{1, 2}, b).approx.size() == 1);
}

TEST_CASE("matches frozen PyWavelets periodization output") {
  for (const auto& g : golden::kSingle) {
    CAPTURE(g.family);
    const auto c = dwt1d(golden::kSignal, get_filter_bank(parse_family(g.family)));
    CHECK(max_diff(c.approx, g.approx) < 1e-12);
    CHECK(max_diff(c.detail, g.detail) < 1e-12);
  }
  for (const auto& g : golden::kTwoLevel) {
    CAPTURE(g.family);
    const auto c = dwt1d_multilevel(golden::kSignal, get_filter_bank(parse_family(g.family)), 2);
    CHECK(max_diff(c.approx, g.approx) < 1e-12);
    REQUIRE(c.details.size() == 2);
    CHECK(max_diff(c.details[0], g.fine) < 1e-12);
    CHECK(max_diff(c.details[1], g.coarse) < 1e-12);
  }
}

TEST_CASE("matches the dense periodized matrices") {
  testsupport::Rng rng(11);
  for (Family f : kAllFamilies) {
    const FilterBank& b = get_filter_bank(f);
    CAPTURE(family_name(f));
    for (std::size_t n : {2, 4, 6, 10, 16, 34, 64}) {
      CAPTURE(n);
      const auto x = testsupport::normal_values(n, rng);
      const auto a = oracle::apply(oracle::analysis_matrix(b.dec_lo, b.dec_hi, n), x);
      const auto c = dwt1d(x, b);
      CHECK(max_diff(c.approx, std::span(a).first(n / 2)) <= 1e-10);
      CHECK(max_diff(c.detail, std::span(a).last(n / 2)) <= 1e-10);

      const auto y = oracle::apply(oracle::synthesis_matrix(b.rec_lo, b.rec_hi, n), x);
      const CoeffPair in{{x.begin(), x.begin() + n / 2}, {x.begin() + n / 2, x.end()}};
      CHECK(max_diff(idwt1d(in, b), y) <= 1e-10);
    }
  }
}

TEST_CASE("round trips on random even lengths") {
  testsupport::Rng rng(12);
  for (Family f : kAllFamilies) {
    const FilterBank& b = get_filter_bank(f);
    CAPTURE(family_name(f));
    for (int trial = 0; trial < 25; ++trial) {
      const auto x = testsupport::normal_values(even_length(rng, 4, 512), rng);
      CAPTURE(x.size());
      const auto c = dwt1d(x, b);
      CHECK(max_diff(idwt1d(c, b), x) <= tolerance(f));
      // Coefficient domain: the square periodized matrices are two-sided inverses.
      const auto back = dwt1d(idwt1d(c, b), b);
      CHECK(max_diff(back.approx, c.approx) <= tolerance(f));
      CHECK(max_diff(back.detail, c.detail) <= tolerance(f));
    }
  }
}

TEST_CASE("linearity, shift covariance and energy") {
  testsupport::Rng rng(13);
  for (Family f : kAllFamilies) {
    const FilterBank& b = get_filter_bank(f);
    CAPTURE(family_name(f));
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = even_length(rng, 4, 128);
      const auto x = testsupport::normal_values(n, rng);
      const auto y = testsupport::normal_values(n, rng);
      const double alpha = 1.7, beta = -0.3;
      std::vector<double> mix(n);
      for (std::size_t i = 0; i < n; ++i) mix[i] = alpha * x[i] + beta * y[i];
      const auto cx = dwt1d(x, b), cy = dwt1d(y, b), cm = dwt1d(mix, b);
      for (std::size_t k = 0; k < n / 2; ++k) {
        CHECK(std::abs(cm.approx[k] - (alpha * cx.approx[k] + beta * cy.approx[k])) <= 1e-10);
        CHECK(std::abs(cm.detail[k] - (alpha * cx.detail[k] + beta * cy.detail[k])) <= 1e-10);
      }

      std::vector<double> rotated(n);
      for (std::size_t i = 0; i < n; ++i) rotated[i] = x[(i + 2) % n];
      const auto cr = dwt1d(rotated, b);
      for (std::size_t k = 0; k < n / 2; ++k) {
        CHECK(std::abs(cr.approx[k] - cx.approx[(k + 1) % (n / 2)]) <= 1e-12);
      }

      if (b.orthogonal) {
        const double e = norm_sq(x);
        CHECK(std::abs(norm_sq(cx.approx) + norm_sq(cx.detail) - e) <= 1e-8 * e);
      }
    }
  }
}

TEST_CASE("multilevel") {
  const FilterBank& haar = get_filter_bank(Family::haar);
  const std::vector<double> x = {1, 2, 3, 4, 5, 6, 7, 8};

  const auto three = dwt1d_multilevel(x, haar, 3);
  CHECK(three.approx.size() == 1);
  REQUIRE(three.details.size() == 3);
  CHECK(three.details[0].size() == 4);
  CHECK(three.details[1].size() == 2);
  CHECK(three.details[2].size() == 1);
  CHECK(max_diff(idwt1d_multilevel(three, haar), x) < 1e-12);

  const auto none = dwt1d_multilevel(x, haar, 0);
  CHECK(none.approx == x);
  CHECK(none.details.empty());

  const double c = 0.75;
  const auto flat = dwt1d_multilevel(std::vector<double>(8, c), haar, 2);
  CHECK(max_diff(flat.approx, std::vector<double>{2 * c, 2 * c}) < 1e-15);

  CHECK(code_of([&] { dwt1d_multilevel(std::vector<double>(12, 1.0), haar, 3); }) ==
        ErrorCode::NotDivisible);
  CHECK(code_of([&] { dwt1d_multilevel(x, haar, 4); }) == ErrorCode::NotDivisible);

  testsupport::Rng rng(14);
  for (Family f : kAllFamilies) {
    const auto y = testsupport::normal_values(64, rng);
    const auto& b = get_filter_bank(f);
    CHECK(max_diff(idwt1d_multilevel(dwt1d_multilevel(y, b, 4), b), y) <= tolerance(f));
  }
}
