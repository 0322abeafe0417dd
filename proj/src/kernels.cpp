#include "wavexfer/kernels.hpp"

#include <cstdint>

namespace wavexfer {

namespace {

// Periodized analysis of one output row k: accumulate every tap into the
// `inner`-wide row. Taps longer than the signal wrap more than once.
inline void accumulate_analysis(const double* in, std::size_t length, std::size_t inner,
                                std::span<const double> filter, std::size_t k, double* row) {
  const std::size_t taps = filter.size();
  const std::size_t shift = taps / 2;
  for (std::size_t m = 0; m < taps; ++m) {
    // (2k + shift - m) mod length, without going negative.
    const std::size_t n = (2 * k + shift + taps * length - m) % length;
    const double c = filter[m];
    const double* src = in + n * inner;
    for (std::size_t i = 0; i < inner; ++i) row[i] += c * src[i];
  }
}

// Periodized synthesis of output row n: the taps m with (n + offset - m) even
// land on coefficient k = ((n + offset - m) mod N) / 2.
inline void accumulate_synthesis(const double* band, std::size_t half, std::size_t inner,
                                 std::span<const double> filter, std::size_t n, double* row) {
  const std::size_t length = 2 * half;
  const std::size_t taps = filter.size();
  const std::size_t offset = taps / 2 - 1;
  for (std::size_t m = (n + offset) % 2; m < taps; m += 2) {
    const std::size_t k = ((n + offset + taps * length - m) % length) / 2;
    const double c = filter[m];
    const double* src = band + k * inner;
    for (std::size_t i = 0; i < inner; ++i) row[i] += c * src[i];
  }
}

}  // namespace

void analyze_axis_kernel(std::span<const double> in, AxisLayout layout, const FilterBank& bank,
                         std::span<double> low, std::span<double> high) {
  const std::size_t half = layout.length / 2;
  const std::size_t inner = layout.inner;
  const auto rows = static_cast<std::int64_t>(layout.outer * half);
  const bool want_high = !high.empty();

#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < rows; ++r) {
    const auto o = static_cast<std::size_t>(r) / half;
    const auto k = static_cast<std::size_t>(r) % half;
    const double* fiber = in.data() + o * layout.length * inner;
    double* lo_row = low.data() + (o * half + k) * inner;
    for (std::size_t i = 0; i < inner; ++i) lo_row[i] = 0.0;
    accumulate_analysis(fiber, layout.length, inner, bank.dec_lo, k, lo_row);
    if (want_high) {
      double* hi_row = high.data() + (o * half + k) * inner;
      for (std::size_t i = 0; i < inner; ++i) hi_row[i] = 0.0;
      accumulate_analysis(fiber, layout.length, inner, bank.dec_hi, k, hi_row);
    }
  }
}

void synthesize_axis_kernel(std::span<const double> low, std::span<const double> high,
                            AxisLayout band, const FilterBank& bank, std::span<double> out) {
  const std::size_t half = band.length;
  const std::size_t length = 2 * half;
  const std::size_t inner = band.inner;
  const auto rows = static_cast<std::int64_t>(band.outer * length);
  const bool have_high = !high.empty();

#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < rows; ++r) {
    const auto o = static_cast<std::size_t>(r) / length;
    const auto n = static_cast<std::size_t>(r) % length;
    double* row = out.data() + (o * length + n) * inner;
    for (std::size_t i = 0; i < inner; ++i) row[i] = 0.0;
    accumulate_synthesis(low.data() + o * half * inner, half, inner, bank.rec_lo, n, row);
    if (have_high) {
      accumulate_synthesis(high.data() + o * half * inner, half, inner, bank.rec_hi, n, row);
    }
  }
}

}  // namespace wavexfer
