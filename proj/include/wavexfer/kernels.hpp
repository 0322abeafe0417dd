#pragma once

#include <cstddef>
#include <span>

#include "wavexfer/filters.hpp"

namespace wavexfer {

/// A row-major buffer viewed as `outer` blocks of `length` fibers-positions,
/// each position holding `inner` contiguous values. Filtering runs along
/// `length`; the fiber stride is `inner`.
struct AxisLayout {
  std::size_t outer = 1;
  std::size_t length = 0;
  std::size_t inner = 1;

  std::size_t size() const noexcept { return outer * length * inner; }
  AxisLayout halved() const noexcept { return {outer, length / 2, inner}; }
  AxisLayout doubled() const noexcept { return {outer, length * 2, inner}; }
};

// OpenMP kernels. Every output element is a gather over the same taps in the
// same order, so results are bitwise independent of the thread count.

/// One periodized analysis step along `layout.length` (must be even).
/// `high` may be empty when only the approximation band is wanted.
void analyze_axis_kernel(std::span<const double> in, AxisLayout layout, const FilterBank& bank,
                         std::span<double> low, std::span<double> high);

/// One periodized synthesis step; `band` is the half-length layout of the
/// inputs. An empty `high` is treated as an all-zero detail band.
void synthesize_axis_kernel(std::span<const double> low, std::span<const double> high,
                            AxisLayout band, const FilterBank& bank, std::span<double> out);

namespace reference {

// Serial scatter-form versions of the kernels above. Kept for tests and the
// benchmark; they do not share loop structure with the parallel path.

void analyze_axis(std::span<const double> in, AxisLayout layout, const FilterBank& bank,
                  std::span<double> low, std::span<double> high);

void synthesize_axis(std::span<const double> low, std::span<const double> high, AxisLayout band,
                     const FilterBank& bank, std::span<double> out);

}  // namespace reference

}  // namespace wavexfer
