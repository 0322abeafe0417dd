// Dense periodized transform matrices written straight from the index sums.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

// Rows 0..N/2-1: cA[k] = sum_m lo[m] x[(2k + L/2 - m) mod N]; rows N/2..N-1 the same with hi.
inline Matrix analysis_matrix(std::span<const double> lo, std::span<const double> hi,
                              std::size_t n) {
  Matrix a(n, std::vector<double>(n, 0.0));
  const long taps = static_cast<long>(lo.size());
  const long len = static_cast<long>(n);
  for (long k = 0; k < len / 2; ++k) {
    for (long m = 0; m < taps; ++m) {
      long idx = (2 * k + taps / 2 - m) % len;
      if (idx < 0) idx += len;
      a[k][idx] += lo[m];
      a[len / 2 + k][idx] += hi[m];
    }
  }
  return a;
}

// Column k scatters cA[k] to x[(2k + m - (L/2 - 1)) mod N] with weight lo[m]; column N/2+k with hi.
inline Matrix synthesis_matrix(std::span<const double> lo, std::span<const double> hi,
                               std::size_t n) {
  Matrix s(n, std::vector<double>(n, 0.0));
  const long taps = static_cast<long>(lo.size());
  const long len = static_cast<long>(n);
  for (long k = 0; k < len / 2; ++k) {
    for (long m = 0; m < taps; ++m) {
      long idx = (2 * k + m - (taps / 2 - 1)) % len;
      if (idx < 0) idx += len;
      s[idx][k] += lo[m];
      s[idx][len / 2 + k] += hi[m];
    }
  }
  return s;
}

inline std::vector<double> apply(const Matrix& m, std::span<const double> x) {
  std::vector<double> y(m.size(), 0.0);
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < x.size(); ++c) y[r] += m[r][c] * x[c];
  }
  return y;
}

}  // namespace oracle
