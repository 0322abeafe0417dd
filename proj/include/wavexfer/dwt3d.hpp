#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "wavexfer/filters.hpp"
#include "wavexfer/tensor.hpp"

namespace wavexfer {

/// Low and high bands of one analysis step along `axis`. Throws OddAxisLength.
std::pair<Tensor3, Tensor3> analyze_axis(const Tensor3& t, Axis axis, const FilterBank& bank);

/// Low band only (same arithmetic as analyze_axis().first).
Tensor3 analyze_axis_low(const Tensor3& t, Axis axis, const FilterBank& bank);

/// Inverse of analyze_axis. A null `high` means an all-zero detail band.
/// Throws ShapeMismatch when the bands differ in shape.
Tensor3 synthesize_axis(const Tensor3& low, const Tensor3* high, Axis axis, const FilterBank& bank);

/// One 3D analysis step: cA plus the seven detail bands.
///
/// details[m-1] holds cD_m. Its label spells the filter applied along
/// (L, Din, Dout), so cD_1 = LLH is low/low/high.
struct SubbandSet {
  static constexpr std::array<std::string_view, 7> kLabels = {"LLH", "LHL", "LHH", "HLL",
                                                              "HLH", "HHL", "HHH"};
  Tensor3 approx;
  std::array<Tensor3, 7> details;
};

/// Throws OddAxisLength unless every dim is even. `order` only changes the
/// sequence of 1D passes; the bands are identical up to rounding.
SubbandSet dwt3d(const Tensor3& t, const FilterBank& bank,
                 const std::array<Axis, 3>& order = kAxes);

/// Throws ShapeMismatch when the eight bands disagree in shape.
Tensor3 idwt3d(const SubbandSet& bands, const FilterBank& bank);

/// Analysis over an arbitrary subset of axes. Bands are indexed by a bitmask
/// over `axes` (first listed axis is the most significant bit, 1 = high).
std::vector<Tensor3> analyze_axes(const Tensor3& t, std::span<const Axis> axes,
                                  const FilterBank& bank);

/// Inverse of analyze_axes. bands[0] must be present; empty optionals are zero bands.
Tensor3 synthesize_axes(std::vector<std::optional<Tensor3>> bands, std::span<const Axis> axes,
                        const FilterBank& bank);

/// Per-axis decomposition depth; the scale factor along an axis is 2^level.
struct LevelSpec {
  std::array<std::size_t, 3> levels{0, 0, 0};

  std::size_t operator[](Axis a) const noexcept { return levels[axis_index(a)]; }
  std::size_t& operator[](Axis a) noexcept { return levels[axis_index(a)]; }
  std::size_t max_level() const noexcept;
  bool is_identity() const noexcept { return max_level() == 0; }

  friend bool operator==(const LevelSpec&, const LevelSpec&) = default;
};

std::string format_levels(const LevelSpec& spec);

/// dims / 2^levels per axis; throws NotDivisible.
Dims reduced_dims(const Dims& dims, const LevelSpec& spec);

/// Keeps only the all-low-pass band, axis by axis (L, then Din, then Dout).
/// Throws NotDivisible.
Tensor3 analyze_to_approx(const Tensor3& t, const LevelSpec& spec, const FilterBank& bank);

/// Supplies detail bands during multi-level synthesis.
class DetailSource {
 public:
  virtual ~DetailSource() = default;

  /// `count` = 2^m - 1 bands shaped like `low` for a step over m axes, in
  /// analyze_axes index order starting at 1. `step` counts from the coarsest
  /// level (0). Empty optionals mean zero bands.
  virtual std::vector<std::optional<Tensor3>> bands(std::size_t step, const Tensor3& low,
                                                    std::size_t count) = 0;
};

class ZeroDetails final : public DetailSource {
 public:
  std::vector<std::optional<Tensor3>> bands(std::size_t, const Tensor3&,
                                            std::size_t count) override {
    return std::vector<std::optional<Tensor3>>(count);
  }
};

/// Inverse of analyze_to_approx with supplied details. Step t (coarsest first)
/// synthesizes every axis whose level exceeds max_level - 1 - t.
Tensor3 synthesize_from_approx(const Tensor3& approx, const LevelSpec& spec,
                               const FilterBank& bank, DetailSource& details);

}  // namespace wavexfer
