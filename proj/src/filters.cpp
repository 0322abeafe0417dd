#include "wavexfer/filters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "filter_tables.hpp"
#include "wavexfer/error.hpp"
#include "wavexfer/kernels.hpp"

namespace wavexfer {

std::string_view family_name(Family family) noexcept {
  switch (family) {
    case Family::haar: return "haar";
    case Family::db2: return "db2";
    case Family::db4: return "db4";
    case Family::sym8: return "sym8";
    case Family::coif3: return "coif3";
    case Family::bior3_3: return "bior3.3";
    case Family::bior4_4: return "bior4.4";
    case Family::bior6_8: return "bior6.8";
    case Family::rbio3_3: return "rbio3.3";
    case Family::dmey: return "dmey";
  }
  return "?";
}

Family parse_family(std::string_view id) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == id) return f;
  }
  fail(ErrorCode::UnknownFamily, "unsupported wavelet family '" + std::string(id) + "'");
}

namespace {

FilterBank build_bank(const detail::RawFilterTable& raw) {
  FilterBank bank;
  bank.family = raw.family;
  bank.orthogonal = raw.orthogonal;
  bank.dec_lo.assign(raw.dec_lo.begin(), raw.dec_lo.end());
  bank.dec_hi.assign(raw.dec_hi.begin(), raw.dec_hi.end());
  if (raw.orthogonal) {
    bank.rec_lo.assign(raw.dec_lo.rbegin(), raw.dec_lo.rend());
    bank.rec_hi.assign(raw.dec_hi.rbegin(), raw.dec_hi.rend());
  } else {
    bank.rec_lo.assign(raw.rec_lo.begin(), raw.rec_lo.end());
    bank.rec_hi.assign(raw.rec_hi.begin(), raw.rec_hi.end());
  }
  return bank;
}

}  // namespace

const FilterBank& get_filter_bank(Family family) {
  static const std::array<FilterBank, kFamilyCount> banks = [] {
    std::array<FilterBank, kFamilyCount> out;
    for (const auto& raw : detail::raw_filter_tables()) {
      out[static_cast<std::size_t>(raw.family)] = build_bank(raw);
    }
    return out;
  }();
  const auto index = static_cast<std::size_t>(family);
  if (index >= banks.size()) fail(ErrorCode::UnknownFamily, "family index out of range");
  return banks[index];
}

std::vector<double> quadrature_mirror(std::span<const double> lowpass) {
  const std::size_t n_taps = lowpass.size();
  std::vector<double> h(n_taps);
  for (std::size_t n = 0; n < n_taps; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    h[n] = sign * lowpass[n_taps - 1 - n];
  }
  return h;
}

std::vector<double> derive_highpass(const FilterBank& bank) {
  if (!bank.orthogonal) {
    fail(ErrorCode::NotOrthogonal, std::string(family_name(bank.family)) +
                                       " is biorthogonal; its high-pass is not a QMF of dec_lo");
  }
  return quadrature_mirror(bank.dec_lo);
}

bool equal_up_to_sign(std::span<const double> a, std::span<const double> b, double tol) {
  if (a.size() != b.size()) return false;
  bool same = true;
  bool flipped = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    same = same && std::abs(a[i] - b[i]) <= tol;
    flipped = flipped && std::abs(a[i] + b[i]) <= tol;
  }
  return same || flipped;
}

double reconstruction_tolerance(Family family) noexcept {
  return family == Family::dmey ? 1e-6 : 1e-8;
}

ValidationReport validate_bank(const FilterBank& bank) {
  ValidationReport report;
  report.reconstruction_tolerance = reconstruction_tolerance(bank.family);

  report.coefficient_counts_ok = !bank.dec_lo.empty() && !bank.rec_lo.empty() &&
                                 bank.dec_lo.size() == bank.dec_hi.size() &&
                                 bank.rec_lo.size() == bank.rec_hi.size() &&
                                 bank.dec_lo.size() % 2 == 0 && bank.rec_lo.size() % 2 == 0;
  if (!report.coefficient_counts_ok) {
    report.failures.emplace_back("coefficient counts are inconsistent");
    report.reconstruction_ok = false;
    return report;
  }

  if (bank.orthogonal) {
    report.orthogonal_identities_checked = true;
    const double sum_lo = std::accumulate(bank.dec_lo.begin(), bank.dec_lo.end(), 0.0);
    const double sum_hi = std::accumulate(bank.dec_hi.begin(), bank.dec_hi.end(), 0.0);
    const double energy =
        std::inner_product(bank.dec_lo.begin(), bank.dec_lo.end(), bank.dec_lo.begin(), 0.0);
    if (std::abs(sum_lo - std::sqrt(2.0)) > 1e-10) {
      report.orthogonal_identities_ok = false;
      report.failures.emplace_back("sum(dec_lo) != sqrt(2)");
    }
    if (std::abs(sum_hi) > 1e-10) {
      report.orthogonal_identities_ok = false;
      report.failures.emplace_back("sum(dec_hi) != 0");
    }
    if (std::abs(energy - 1.0) > 1e-10) {
      report.orthogonal_identities_ok = false;
      report.failures.emplace_back("sum(dec_lo^2) != 1");
    }
  }

  constexpr std::size_t kSignals = 64;
  constexpr std::size_t kLength = 16;
  std::mt19937_64 rng(0x5eed'f11e'7e55ULL);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> x(kLength), lo(kLength / 2), hi(kLength / 2), y(kLength);
  const AxisLayout layout{1, kLength, 1};
  double worst = 0.0;
  for (std::size_t s = 0; s < kSignals; ++s) {
    for (double& v : x) v = dist(rng);
    analyze_axis_kernel(x, layout, bank, lo, hi);
    synthesize_axis_kernel(lo, hi, layout.halved(), bank, y);
    for (std::size_t i = 0; i < kLength; ++i) worst = std::max(worst, std::abs(y[i] - x[i]));
  }
  report.max_reconstruction_error = worst;
  report.reconstruction_ok = std::isfinite(worst) && worst <= report.reconstruction_tolerance;
  if (!report.reconstruction_ok) report.failures.emplace_back("perfect reconstruction failed");
  return report;
}

}  // namespace wavexfer
