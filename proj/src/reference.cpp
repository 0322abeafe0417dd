#include <algorithm>

#include "wavexfer/kernels.hpp"

namespace wavexfer::reference {

namespace {

std::size_t wrap(long long index, std::size_t length) {
  const auto n = static_cast<long long>(length);
  return static_cast<std::size_t>(((index % n) + n) % n);
}

}  // namespace

// Input-driven form: each sample x[n] is pushed into every output it feeds.
void analyze_axis(std::span<const double> in, AxisLayout layout, const FilterBank& bank,
                  std::span<double> low, std::span<double> high) {
  std::fill(low.begin(), low.end(), 0.0);
  std::fill(high.begin(), high.end(), 0.0);
  const std::size_t half = layout.length / 2;
  const auto shift = static_cast<long long>(bank.dec_length() / 2);
  for (std::size_t o = 0; o < layout.outer; ++o) {
    for (std::size_t i = 0; i < layout.inner; ++i) {
      for (std::size_t k = 0; k < half; ++k) {
        for (std::size_t m = 0; m < bank.dec_length(); ++m) {
          const std::size_t n =
              wrap(2 * static_cast<long long>(k) + shift - static_cast<long long>(m), layout.length);
          const double x = in[(o * layout.length + n) * layout.inner + i];
          const std::size_t dst = (o * half + k) * layout.inner + i;
          low[dst] += bank.dec_lo[m] * x;
          if (!high.empty()) high[dst] += bank.dec_hi[m] * x;
        }
      }
    }
  }
}

void synthesize_axis(std::span<const double> low, std::span<const double> high, AxisLayout band,
                     const FilterBank& bank, std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  const std::size_t length = 2 * band.length;
  const auto offset = static_cast<long long>(bank.rec_length() / 2) - 1;
  for (std::size_t o = 0; o < band.outer; ++o) {
    for (std::size_t i = 0; i < band.inner; ++i) {
      for (std::size_t k = 0; k < band.length; ++k) {
        const std::size_t src = (o * band.length + k) * band.inner + i;
        for (std::size_t m = 0; m < bank.rec_length(); ++m) {
          const std::size_t n =
              wrap(2 * static_cast<long long>(k) + static_cast<long long>(m) - offset, length);
          double& y = out[(o * length + n) * band.inner + i];
          y += bank.rec_lo[m] * low[src];
          if (!high.empty()) y += bank.rec_hi[m] * high[src];
        }
      }
    }
  }
}

}  // namespace wavexfer::reference
