#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "wavexfer/checkpoint.hpp"
#include "wavexfer/dwt3d.hpp"
#include "wavexfer/policy.hpp"

namespace wavexfer {

/// Layer count, hidden width and feed-forward width. A width of 0 is unknown.
struct Arch {
  std::size_t layers = 0;
  std::size_t hidden = 0;
  std::size_t ffn = 0;

  friend bool operator==(const Arch&, const Arch&) = default;
};

/// One function-specific group stacked along the layer axis.
///
/// Members are laid out as (rows, cols) slices: rank-1 members of length d
/// become d x 1, rank-3 members (a, b, c) become (a*b) x c with `member_lead`
/// = a. Singleton groups have one slice.
struct Module {
  Tensor3 weights;
  DType dtype = DType::f32;
  std::uint8_t member_rank = 2;
  std::size_t member_lead = 1;
  bool layered = true;
  AxisSet transform_axes = AxisSet::all();
};

struct ConsolidatedModel {
  std::map<std::string, Module, std::less<>> modules;
  Checkpoint residual;
  Arch arch;
};

/// Stacks the tensors matched by each rule. Throws MissingLayer,
/// ShapeInconsistent, UnmatchedTensor (passthrough = error) or InvalidPolicy.
ConsolidatedModel consolidate(const Checkpoint& ckpt, const GroupPolicy& policy);

/// Splits modules back into named tensors. Throws ShapeInconsistent when a
/// layered module's depth differs from model.arch.layers or a slice cannot
/// take its member shape.
Checkpoint deconsolidate(const ConsolidatedModel& model, const GroupPolicy& policy);

/// Architecture widths read from the modules named in the policy's arch block.
Arch infer_arch(const ConsolidatedModel& model, const GroupPolicy& policy);

enum class Direction { neutral, large_to_small, small_to_large };

std::string_view direction_name(Direction d) noexcept;

struct LevelPlan {
  LevelSpec spec;
  Direction direction = Direction::neutral;
};

/// Per-axis power-of-two level between two shapes. Throws NotPowerOfTwoRatio
/// or MixedDirection.
LevelPlan infer_level_spec(const Dims& src, const Dims& tgt);

}  // namespace wavexfer
