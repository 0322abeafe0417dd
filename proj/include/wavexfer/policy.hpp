#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wavexfer/tensor.hpp"

namespace wavexfer {

struct AxisSet {
  std::array<bool, 3> on{false, false, false};

  static AxisSet all() { return AxisSet{{true, true, true}}; }
  bool contains(Axis a) const noexcept { return on[axis_index(a)]; }
  void insert(Axis a) noexcept { on[axis_index(a)] = true; }
  friend bool operator==(const AxisSet&, const AxisSet&) = default;
};

/// One grouping rule. A pattern with a single "{}" placeholder matches one
/// tensor per layer ("encoder.layer.{}.attention.q.weight"); a pattern without
/// a placeholder names a single tensor that forms its own group.
struct GroupRule {
  std::string pattern;
  std::string group;
  AxisSet transform_axes = AxisSet::all();

  bool layered() const noexcept;
  /// Layer index for a layered match, 0 for a singleton match.
  std::optional<std::size_t> match(std::string_view name) const;
  std::string instantiate(std::size_t layer) const;
};

enum class Passthrough { copy, error };

/// Where an architecture width is read from: a group's axis.
struct DimSource {
  std::string group;
  Axis axis = Axis::d_in;
};

struct GroupPolicy {
  std::string name;
  std::vector<GroupRule> rules;
  Passthrough passthrough = Passthrough::copy;
  std::optional<DimSource> hidden;
  std::optional<DimSource> ffn;

  /// First rule whose pattern matches `name`.
  const GroupRule* rule_for(std::string_view tensor_name) const;
  const GroupRule* rule_by_group(std::string_view group) const;
};

/// Parses the JSON policy document. Throws InvalidPolicy.
GroupPolicy parse_policy(std::string_view json_text);
std::string policy_to_json(const GroupPolicy& policy);

/// Shipped presets: "bert-like", "gpt-like", "deit-like".
std::vector<std::string_view> preset_names();
/// Throws InvalidPolicy for an unknown preset.
GroupPolicy preset_policy(std::string_view name);

/// Preset name if it is one, otherwise a path to a policy file.
GroupPolicy resolve_policy(std::string_view name_or_path);

}  // namespace wavexfer
