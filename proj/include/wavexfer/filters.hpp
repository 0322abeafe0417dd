#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wavexfer {

enum class Family {
  haar,
  db2,
  db4,
  sym8,
  coif3,
  bior3_3,
  bior4_4,
  bior6_8,
  rbio3_3,
  dmey,
};

inline constexpr std::size_t kFamilyCount = 10;

inline constexpr std::array<Family, kFamilyCount> kAllFamilies = {
    Family::haar,    Family::db2,     Family::db4,     Family::sym8,    Family::coif3,
    Family::bior3_3, Family::bior4_4, Family::bior6_8, Family::rbio3_3, Family::dmey,
};

/// Canonical id as used on the command line ("bior3.3", "dmey", ...).
std::string_view family_name(Family family) noexcept;

/// Throws Error(UnknownFamily) for ids outside the supported set.
Family parse_family(std::string_view id);

/// Analysis (dec_*) and synthesis (rec_*) filters of one wavelet family.
///
/// Coefficient order and sign follow the PyWavelets tables. Analysis is
///   cA[k] = sum_m dec_lo[m] * x[(2k + |dec_lo|/2 - m) mod N]
/// and synthesis scatters rec_lo[m] * cA[k] to x[(2k + m - |rec_lo|/2 + 1) mod N].
struct FilterBank {
  Family family = Family::haar;
  bool orthogonal = true;
  std::vector<double> dec_lo;
  std::vector<double> dec_hi;
  std::vector<double> rec_lo;
  std::vector<double> rec_hi;

  std::size_t dec_length() const noexcept { return dec_lo.size(); }
  std::size_t rec_length() const noexcept { return rec_lo.size(); }
};

/// Shared immutable bank built from the embedded coefficient table.
const FilterBank& get_filter_bank(Family family);

/// Alternating flip h[n] = (-1)^n g[L-1-n].
std::vector<double> quadrature_mirror(std::span<const double> lowpass);

/// Quadrature-mirror high-pass of an orthogonal bank's dec_lo.
/// Throws Error(NotOrthogonal) for biorthogonal banks.
std::vector<double> derive_highpass(const FilterBank& bank);

/// True when a and b agree elementwise within tol, or agree after negating b.
bool equal_up_to_sign(std::span<const double> a, std::span<const double> b, double tol);

struct ValidationReport {
  bool reconstruction_ok = false;
  double max_reconstruction_error = 0.0;
  bool orthogonal_identities_checked = false;
  bool orthogonal_identities_ok = true;
  bool coefficient_counts_ok = false;
  double reconstruction_tolerance = 0.0;
  std::vector<std::string> failures;

  bool passed() const noexcept {
    return reconstruction_ok && orthogonal_identities_ok && coefficient_counts_ok;
  }
};

/// Round-trip tolerance used for a family (dmey is an FIR approximation).
double reconstruction_tolerance(Family family) noexcept;

/// Runs 64 random length-16 round trips, the orthogonal sum identities (when
/// bank.orthogonal) and the length checks. Failures are reported, not thrown.
ValidationReport validate_bank(const FilterBank& bank);

}  // namespace wavexfer
