#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wavexfer/filters.hpp"

namespace wavexfer {

/// Single-level periodized coefficients; both halves have length N/2.
struct CoeffPair {
  std::vector<double> approx;
  std::vector<double> detail;
};

/// Throws OddLength for odd N and TooShort for N < 2.
CoeffPair dwt1d(std::span<const double> signal, const FilterBank& bank);

/// Throws LengthMismatch when the halves differ and TooShort when empty.
std::vector<double> idwt1d(const CoeffPair& coeffs, const FilterBank& bank);

struct MultilevelCoeffs {
  std::vector<double> approx;
  /// details[0] is the finest level (length N/2), then N/4, ...
  std::vector<std::vector<double>> details;
};

/// Recursive analysis of the running approximation. Throws NotDivisible
/// unless N is a multiple of 2^levels (and N/2^levels >= 1).
MultilevelCoeffs dwt1d_multilevel(std::span<const double> signal, const FilterBank& bank,
                                  std::size_t levels);

std::vector<double> idwt1d_multilevel(const MultilevelCoeffs& coeffs, const FilterBank& bank);

}  // namespace wavexfer
