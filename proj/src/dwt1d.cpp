#include "wavexfer/dwt1d.hpp"

#include <string>

#include "wavexfer/error.hpp"
#include "wavexfer/kernels.hpp"

namespace wavexfer {

CoeffPair dwt1d(std::span<const double> signal, const FilterBank& bank) {
  const std::size_t n = signal.size();
  if (n < 2) fail(ErrorCode::TooShort, "signal length " + std::to_string(n) + " < 2");
  if (n % 2 != 0) fail(ErrorCode::OddLength, "signal length " + std::to_string(n) + " is odd");
  CoeffPair out{std::vector<double>(n / 2), std::vector<double>(n / 2)};
  analyze_axis_kernel(signal, {1, n, 1}, bank, out.approx, out.detail);
  return out;
}

std::vector<double> idwt1d(const CoeffPair& coeffs, const FilterBank& bank) {
  if (coeffs.approx.size() != coeffs.detail.size()) {
    fail(ErrorCode::LengthMismatch, "cA has " + std::to_string(coeffs.approx.size()) +
                                        " values, cD has " + std::to_string(coeffs.detail.size()));
  }
  if (coeffs.approx.empty()) fail(ErrorCode::TooShort, "empty coefficient vectors");
  const std::size_t half = coeffs.approx.size();
  std::vector<double> out(2 * half);
  synthesize_axis_kernel(coeffs.approx, coeffs.detail, {1, half, 1}, bank, out);
  return out;
}

MultilevelCoeffs dwt1d_multilevel(std::span<const double> signal, const FilterBank& bank,
                                  std::size_t levels) {
  const std::size_t n = signal.size();
  if (levels >= 64 || n == 0 || (n % (std::size_t{1} << levels)) != 0) {
    fail(ErrorCode::NotDivisible, "length " + std::to_string(n) + " is not divisible by 2^" +
                                      std::to_string(levels));
  }
  MultilevelCoeffs out;
  out.approx.assign(signal.begin(), signal.end());
  for (std::size_t level = 0; level < levels; ++level) {
    CoeffPair step = dwt1d(out.approx, bank);
    out.approx = std::move(step.approx);
    out.details.push_back(std::move(step.detail));
  }
  return out;
}

std::vector<double> idwt1d_multilevel(const MultilevelCoeffs& coeffs, const FilterBank& bank) {
  std::vector<double> running = coeffs.approx;
  for (auto it = coeffs.details.rbegin(); it != coeffs.details.rend(); ++it) {
    running = idwt1d(CoeffPair{std::move(running), *it}, bank);
  }
  return running;
}

}  // namespace wavexfer
