#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "oracle/pywt_golden.hpp"
#include "wavexfer/error.hpp"
#include "wavexfer/filters.hpp"

using namespace wavexfer;

namespace {

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

double sum_sq(const std::vector<double>& v) {
  return std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
}

}  // namespace

TEST_CASE("family ids round-trip and unknown ids are rejected") {
  for (Family f : kAllFamilies) CHECK(parse_family(family_name(f)) == f);
  CHECK(family_name(Family::bior3_3) == "bior3.3");
  try {
    parse_family("db3");
    FAIL("expected UnknownFamily");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownFamily);
  }
  CHECK_THROWS_AS(parse_family(""), Error);
  CHECK_THROWS_AS(parse_family("HAAR"), Error);
}

TEST_CASE("haar coefficients") {
  const FilterBank& b = get_filter_bank(Family::haar);
  const double r = 1.0 / std::sqrt(2.0);
  REQUIRE(b.dec_lo.size() == 2);
  CHECK(b.dec_lo[0] == doctest::Approx(r).epsilon(1e-15));
  CHECK(b.dec_lo[1] == doctest::Approx(r).epsilon(1e-15));
  CHECK(std::abs(b.dec_hi[0]) == doctest::Approx(r).epsilon(1e-15));
  CHECK(b.dec_hi[0] == doctest::Approx(-b.dec_hi[1]).epsilon(1e-15));
}

TEST_CASE("filter lengths") {
  struct Row {
    Family family;
    std::size_t dec;
  };
  const Row rows[] = {{Family::haar, 2},     {Family::db2, 4},      {Family::db4, 8},
                      {Family::sym8, 16},    {Family::coif3, 18},   {Family::bior3_3, 8},
                      {Family::bior4_4, 10}, {Family::bior6_8, 18}, {Family::rbio3_3, 8},
                      {Family::dmey, 62}};
  for (const Row& r : rows) {
    const FilterBank& b = get_filter_bank(r.family);
    CAPTURE(family_name(r.family));
    CHECK(b.dec_lo.size() == r.dec);
    CHECK(b.dec_hi.size() == r.dec);
    CHECK(b.rec_lo.size() == b.rec_hi.size());
  }
}

TEST_CASE("orthogonal sum identities") {
  for (Family f : kAllFamilies) {
    const FilterBank& b = get_filter_bank(f);
    if (!b.orthogonal) continue;
    CAPTURE(family_name(f));
    CHECK(std::abs(sum(b.dec_lo) - std::sqrt(2.0)) <= 1e-10);
    CHECK(std::abs(sum(b.dec_hi)) <= 1e-10);
    CHECK(std::abs(sum_sq(b.dec_lo) - 1.0) <= 1e-10);
    std::vector<double> rev(b.dec_lo.rbegin(), b.dec_lo.rend());
    CHECK(rev == b.rec_lo);
  }
}

TEST_CASE("orthogonal flag") {
  for (Family f : {Family::bior3_3, Family::bior4_4, Family::bior6_8, Family::rbio3_3}) {
    CHECK_FALSE(get_filter_bank(f).orthogonal);
  }
  for (Family f : {Family::haar, Family::db2, Family::db4, Family::sym8, Family::coif3, Family::dmey}) {
    CHECK(get_filter_bank(f).orthogonal);
  }
}

TEST_CASE("derive_highpass") {
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<double> haar_hi = {r, -r};
  CHECK(equal_up_to_sign(derive_highpass(get_filter_bank(Family::haar)), haar_hi, 1e-15));

  for (Family f : kAllFamilies) {
    const FilterBank& b = get_filter_bank(f);
    CAPTURE(family_name(f));
    if (b.orthogonal) {
      CHECK(equal_up_to_sign(derive_highpass(b), b.dec_hi, 1e-12));
    } else {
      try {
        derive_highpass(b);
        FAIL("expected NotOrthogonal");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotOrthogonal);
      }
    }
  }
}

TEST_CASE("quadrature_mirror is an involution up to sign") {
  const std::vector<double> g = {0.1, -0.4, 2.5, 0.75};
  const auto h = quadrature_mirror(g);
  CHECK(h == std::vector<double>{0.75, -2.5, -0.4, -0.1});
  CHECK(equal_up_to_sign(quadrature_mirror(h), g, 0.0));
}

TEST_CASE("equal_up_to_sign") {
  const std::vector<double> a = {1.0, -2.0};
  CHECK(equal_up_to_sign(a, std::vector<double>{-1.0, 2.0}, 0.0));
  CHECK_FALSE(equal_up_to_sign(a, std::vector<double>{1.0, 2.0}, 1e-3));
  CHECK_FALSE(equal_up_to_sign(a, std::vector<double>{1.0}, 1e-3));
}

TEST_CASE("validate_bank passes every embedded family") {
  for (Family f : kAllFamilies) {
    const ValidationReport r = validate_bank(get_filter_bank(f));
    CAPTURE(family_name(f));
    CAPTURE(r.max_reconstruction_error);
    CHECK(r.passed());
    CHECK(r.failures.empty());
    CHECK(r.orthogonal_identities_checked == get_filter_bank(f).orthogonal);
    CHECK(r.max_reconstruction_error <= reconstruction_tolerance(f));
  }
  CHECK(reconstruction_tolerance(Family::dmey) == 1e-6);
  CHECK(reconstruction_tolerance(Family::db4) == 1e-8);
}

TEST_CASE("validate_bank reports a destroyed high-pass") {
  FilterBank b = get_filter_bank(Family::haar);
  std::fill(b.dec_hi.begin(), b.dec_hi.end(), 0.0);
  const ValidationReport r = validate_bank(b);
  CHECK_FALSE(r.reconstruction_ok);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.failures.empty());
}

TEST_CASE("validate_bank reports mismatched lengths") {
  FilterBank b = get_filter_bank(Family::db2);
  b.dec_hi.push_back(0.0);
  CHECK_FALSE(validate_bank(b).coefficient_counts_ok);
}

TEST_CASE("embedded dmey stays close to the published 62-tap table") {
  const FilterBank& b = get_filter_bank(Family::dmey);
  double dev = 0.0;
  for (std::size_t i = 0; i < golden::kDmeyStandard.size(); ++i) {
    dev = std::max(dev, std::abs(b.dec_lo[i] - golden::kDmeyStandard[i]));
  }
  CHECK(dev < 1e-3);
  CHECK(dev > 0.0);
  // The published table itself misses unit energy by about 2e-3.
  double energy = 0.0;
  for (double g : golden::kDmeyStandard) energy += g * g;
  CHECK(std::abs(energy - 1.0) > 1e-3);
}
