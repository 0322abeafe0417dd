#include "wavexfer/dwt3d.hpp"

#include <algorithm>
#include <string>

#include "wavexfer/error.hpp"
#include "wavexfer/kernels.hpp"

namespace wavexfer {

namespace {

Dims halve(Dims dims, Axis axis) {
  dims[axis_index(axis)] /= 2;
  return dims;
}

Dims twice(Dims dims, Axis axis) {
  dims[axis_index(axis)] *= 2;
  return dims;
}

void require_even(const Tensor3& t, Axis axis) {
  const std::size_t n = t.dim(axis);
  if (n < 2 || n % 2 != 0) {
    fail(ErrorCode::OddAxisLength, "axis " + std::string(axis_name(axis)) + " of " +
                                       format_dims(t.dims()) + " is not even");
  }
}

std::size_t mask_bit(Axis axis, std::span<const Axis> axes) {
  const auto it = std::find(axes.begin(), axes.end(), axis);
  return std::size_t{1} << (axes.size() - 1 - static_cast<std::size_t>(it - axes.begin()));
}

}  // namespace

std::pair<Tensor3, Tensor3> analyze_axis(const Tensor3& t, Axis axis, const FilterBank& bank) {
  require_even(t, axis);
  Tensor3 low(halve(t.dims(), axis));
  Tensor3 high(low.dims());
  analyze_axis_kernel(t.values(), t.layout(axis), bank, low.values(), high.values());
  return {std::move(low), std::move(high)};
}

Tensor3 analyze_axis_low(const Tensor3& t, Axis axis, const FilterBank& bank) {
  require_even(t, axis);
  Tensor3 low(halve(t.dims(), axis));
  analyze_axis_kernel(t.values(), t.layout(axis), bank, low.values(), {});
  return low;
}

Tensor3 synthesize_axis(const Tensor3& low, const Tensor3* high, Axis axis,
                        const FilterBank& bank) {
  if (high != nullptr && high->dims() != low.dims()) {
    fail(ErrorCode::ShapeMismatch, "low band " + format_dims(low.dims()) + " vs high band " +
                                       format_dims(high->dims()));
  }
  Tensor3 out(twice(low.dims(), axis));
  std::span<const double> hi;
  if (high != nullptr) hi = high->values();
  synthesize_axis_kernel(low.values(), hi, low.layout(axis), bank, out.values());
  return out;
}

namespace {

// Applies one analysis pass per axis in `order`; bands are indexed by their
// high/low pattern over `index_axes`.
std::vector<Tensor3> split_bands(const Tensor3& t, std::span<const Axis> order,
                                 std::span<const Axis> index_axes, const FilterBank& bank) {
  std::vector<Tensor3> bands{t};
  std::vector<std::size_t> masks{0};
  for (Axis axis : order) {
    std::vector<Tensor3> next;
    std::vector<std::size_t> next_masks;
    for (std::size_t b = 0; b < bands.size(); ++b) {
      auto [low, high] = analyze_axis(bands[b], axis, bank);
      next.push_back(std::move(low));
      next_masks.push_back(masks[b]);
      next.push_back(std::move(high));
      next_masks.push_back(masks[b] | mask_bit(axis, index_axes));
    }
    bands = std::move(next);
    masks = std::move(next_masks);
  }
  std::vector<Tensor3> ordered(bands.size());
  for (std::size_t b = 0; b < bands.size(); ++b) ordered[masks[b]] = std::move(bands[b]);
  return ordered;
}

}  // namespace

std::vector<Tensor3> analyze_axes(const Tensor3& t, std::span<const Axis> axes,
                                  const FilterBank& bank) {
  return split_bands(t, axes, axes, bank);
}

Tensor3 synthesize_axes(std::vector<std::optional<Tensor3>> bands, std::span<const Axis> axes,
                        const FilterBank& bank) {
  if (bands.size() != (std::size_t{1} << axes.size()) || !bands.front()) {
    fail(ErrorCode::ShapeMismatch, "expected " + std::to_string(std::size_t{1} << axes.size()) +
                                       " bands with an approximation");
  }
  const Dims band_dims = bands.front()->dims();
  for (const auto& b : bands) {
    if (b && b->dims() != band_dims) {
      fail(ErrorCode::ShapeMismatch,
           "band " + format_dims(b->dims()) + " vs approximation " + format_dims(band_dims));
    }
  }
  // Undo the last axis first: pair each band with its high partner in the lowest bit.
  for (std::size_t a = axes.size(); a-- > 0;) {
    const Axis axis = axes[a];
    std::vector<std::optional<Tensor3>> merged(bands.size() / 2);
    for (std::size_t idx = 0; idx < merged.size(); ++idx) {
      auto& low = bands[2 * idx];
      auto& high = bands[2 * idx + 1];
      if (!low && !high) continue;
      if (!low) low.emplace(high->dims());
      merged[idx] = synthesize_axis(*low, high ? &*high : nullptr, axis, bank);
    }
    bands = std::move(merged);
  }
  return std::move(*bands.front());
}

SubbandSet dwt3d(const Tensor3& t, const FilterBank& bank, const std::array<Axis, 3>& order) {
  for (Axis a : kAxes) require_even(t, a);
  std::vector<Tensor3> bands = split_bands(t, order, kAxes, bank);
  SubbandSet out;
  out.approx = std::move(bands[0]);
  for (std::size_t m = 1; m < bands.size(); ++m) out.details[m - 1] = std::move(bands[m]);
  return out;
}

Tensor3 idwt3d(const SubbandSet& bands, const FilterBank& bank) {
  std::vector<std::optional<Tensor3>> all;
  all.emplace_back(bands.approx);
  for (const auto& d : bands.details) all.emplace_back(d);
  return synthesize_axes(std::move(all), kAxes, bank);
}

std::size_t LevelSpec::max_level() const noexcept {
  return *std::max_element(levels.begin(), levels.end());
}

std::string format_levels(const LevelSpec& spec) {
  return "(" + std::to_string(spec.levels[0]) + "," + std::to_string(spec.levels[1]) + "," +
         std::to_string(spec.levels[2]) + ")";
}

Dims reduced_dims(const Dims& dims, const LevelSpec& spec) {
  Dims out = dims;
  for (Axis a : kAxes) {
    const std::size_t level = spec[a];
    const std::size_t n = dims[axis_index(a)];
    if (level >= 63 || (n >> level) == 0 || (n % (std::size_t{1} << level)) != 0) {
      fail(ErrorCode::NotDivisible, "axis " + std::string(axis_name(a)) + " of " +
                                        format_dims(dims) + " is not divisible by 2^" +
                                        std::to_string(level));
    }
    out[axis_index(a)] = n >> level;
  }
  return out;
}

Tensor3 analyze_to_approx(const Tensor3& t, const LevelSpec& spec, const FilterBank& bank) {
  reduced_dims(t.dims(), spec);
  Tensor3 current = t;
  for (Axis a : kAxes) {
    for (std::size_t level = 0; level < spec[a]; ++level) {
      current = analyze_axis_low(current, a, bank);
    }
  }
  return current;
}

Tensor3 synthesize_from_approx(const Tensor3& approx, const LevelSpec& spec,
                               const FilterBank& bank, DetailSource& details) {
  for (Axis a : kAxes) {
    if (spec[a] >= 40) {
      fail(ErrorCode::NotPositiveShape, "level " + std::to_string(spec[a]) + " is too deep");
    }
  }
  Tensor3 current = approx;
  const std::size_t steps = spec.max_level();
  for (std::size_t step = 0; step < steps; ++step) {
    const std::size_t depth = steps - 1 - step;
    std::vector<Axis> active;
    for (Axis a : kAxes) {
      if (spec[a] > depth) active.push_back(a);
    }
    const std::size_t count = (std::size_t{1} << active.size()) - 1;
    std::vector<std::optional<Tensor3>> supplied = details.bands(step, current, count);
    if (supplied.size() != count) {
      fail(ErrorCode::ShapeMismatch, "detail source returned " + std::to_string(supplied.size()) +
                                         " bands, expected " + std::to_string(count));
    }
    std::vector<std::optional<Tensor3>> bands;
    bands.reserve(count + 1);
    bands.emplace_back(std::move(current));
    for (auto& b : supplied) bands.push_back(std::move(b));
    current = synthesize_axes(std::move(bands), active, bank);
  }
  return current;
}

}  // namespace wavexfer
