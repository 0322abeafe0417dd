#include "wavexfer/consolidate.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "wavexfer/error.hpp"

namespace wavexfer {

namespace {

struct Member {
  std::size_t layer;
  const std::string* name;
  const TensorEntry* entry;
};

struct SliceShape {
  std::size_t rows;
  std::size_t cols;
  std::size_t lead;
};

SliceShape slice_shape(const TensorEntry& e) {
  const auto s = e.shape();
  switch (s.size()) {
    case 1:
      return {s[0], 1, 1};
    case 2:
      return {s[0], s[1], 1};
    default:
      return {s[0] * s[1], s[2], s[0]};
  }
}

std::vector<std::size_t> member_shape(const Module& m, const std::string& group) {
  const std::size_t rows = m.weights.dim(Axis::d_in);
  const std::size_t cols = m.weights.dim(Axis::d_out);
  switch (m.member_rank) {
    case 1:
      if (cols != 1) {
        fail(ErrorCode::ShapeInconsistent,
             "group '" + group + "' holds vectors but has " + std::to_string(cols) + " columns");
      }
      return {rows};
    case 2:
      return {rows, cols};
    default:
      if (m.member_lead == 0 || rows % m.member_lead != 0) {
        fail(ErrorCode::ShapeInconsistent, "group '" + group + "' rows " + std::to_string(rows) +
                                               " do not split by leading dim " +
                                               std::to_string(m.member_lead));
      }
      return {m.member_lead, rows / m.member_lead, cols};
  }
}

Module stack(const std::string& group, const GroupRule& rule, std::vector<Member>& members) {
  std::sort(members.begin(), members.end(),
            [](const Member& a, const Member& b) { return a.layer < b.layer; });
  if (!rule.layered() && members.size() != 1) {
    fail(ErrorCode::ShapeInconsistent, "singleton group '" + group + "' matched " +
                                           std::to_string(members.size()) + " tensors");
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].layer != i) {
      fail(ErrorCode::MissingLayer, "group '" + group + "': layer " + std::to_string(i) +
                                        " (" + rule.instantiate(i) + ") is missing");
    }
  }
  const TensorEntry& first = *members.front().entry;
  const SliceShape shape = slice_shape(first);
  for (const Member& m : members) {
    const TensorEntry& e = *m.entry;
    if (e.dtype != first.dtype || e.rank != first.rank || e.values.dims() != first.values.dims()) {
      fail(ErrorCode::ShapeInconsistent,
           "group '" + group + "': " + *m.name + " has shape " + format_shape(e.shape()) + " " +
               std::string(dtype_name(e.dtype)) + ", expected " + format_shape(first.shape()) +
               " " + std::string(dtype_name(first.dtype)));
    }
  }

  Module module;
  module.dtype = first.dtype;
  module.member_rank = first.rank;
  module.member_lead = shape.lead;
  module.layered = rule.layered();
  module.transform_axes = rule.transform_axes;
  module.weights = Tensor3(Dims{members.size(), shape.rows, shape.cols});
  auto out = module.weights.values().begin();
  for (const Member& m : members) {
    const auto v = m.entry->values.values();
    out = std::copy(v.begin(), v.end(), out);
  }
  return module;
}

std::size_t read_width(const ConsolidatedModel& model, const std::optional<DimSource>& src) {
  if (!src) return 0;
  const auto it = model.modules.find(src->group);
  if (it == model.modules.end()) return 0;
  return it->second.weights.dim(src->axis);
}

}  // namespace

ConsolidatedModel consolidate(const Checkpoint& ckpt, const GroupPolicy& policy) {
  std::vector<std::vector<Member>> matched(policy.rules.size());
  ConsolidatedModel model;
  for (const auto& [name, entry] : ckpt) {
    const GroupRule* rule = policy.rule_for(name);
    if (rule == nullptr) {
      if (policy.passthrough == Passthrough::error) {
        fail(ErrorCode::UnmatchedTensor, "tensor '" + name + "' matches no rule");
      }
      model.residual.insert(name, entry);
      continue;
    }
    const auto index = static_cast<std::size_t>(rule - policy.rules.data());
    matched[index].push_back(Member{*rule->match(name), &name, &entry});
  }

  std::size_t layers = 0;
  for (std::size_t r = 0; r < policy.rules.size(); ++r) {
    if (matched[r].empty()) continue;
    const GroupRule& rule = policy.rules[r];
    Module m = stack(rule.group, rule, matched[r]);
    if (m.layered) layers = std::max(layers, m.weights.dim(Axis::layers));
    model.modules.emplace(rule.group, std::move(m));
  }
  for (const auto& [group, m] : model.modules) {
    const std::size_t depth = m.weights.dim(Axis::layers);
    if (m.layered && depth != layers) {
      fail(ErrorCode::MissingLayer,
           "group '" + group + "' has " + std::to_string(depth) + " layers, others have " +
               std::to_string(layers) + " (" + policy.rule_by_group(group)->instantiate(depth) +
               " is missing)");
    }
  }
  model.arch.layers = layers;
  const Arch widths = infer_arch(model, policy);
  model.arch.hidden = widths.hidden;
  model.arch.ffn = widths.ffn;
  return model;
}

Arch infer_arch(const ConsolidatedModel& model, const GroupPolicy& policy) {
  return Arch{model.arch.layers, read_width(model, policy.hidden), read_width(model, policy.ffn)};
}

Checkpoint deconsolidate(const ConsolidatedModel& model, const GroupPolicy& policy) {
  Checkpoint out;
  for (const auto& [group, m] : model.modules) {
    const GroupRule* rule = policy.rule_by_group(group);
    if (rule == nullptr) fail(ErrorCode::InvalidPolicy, "policy has no rule for group '" + group + "'");
    if (rule->layered() != m.layered) {
      fail(ErrorCode::InvalidPolicy, "group '" + group + "' changed between layered and singleton");
    }
    const std::size_t depth = m.weights.dim(Axis::layers);
    const std::size_t expected = m.layered ? model.arch.layers : 1;
    if (depth != expected) {
      fail(ErrorCode::ShapeInconsistent, "group '" + group + "' has " + std::to_string(depth) +
                                             " layers, expected " + std::to_string(expected));
    }
    const auto shape = member_shape(m, group);
    const std::size_t slice = m.weights.dim(Axis::d_in) * m.weights.dim(Axis::d_out);
    const auto values = m.weights.values();
    for (std::size_t l = 0; l < depth; ++l) {
      const auto begin = values.begin() + static_cast<std::ptrdiff_t>(l * slice);
      out.insert(rule->instantiate(l),
                 make_entry(m.dtype, shape,
                            std::vector<double>(begin, begin + static_cast<std::ptrdiff_t>(slice))));
    }
  }
  for (const auto& [name, entry] : model.residual) out.insert(name, entry);
  return out;
}

std::string_view direction_name(Direction d) noexcept {
  switch (d) {
    case Direction::large_to_small:
      return "L2S";
    case Direction::small_to_large:
      return "S2L";
    default:
      return "neutral";
  }
}

LevelPlan infer_level_spec(const Dims& src, const Dims& tgt) {
  LevelPlan plan;
  for (Axis a : kAxes) {
    const std::size_t s = src[axis_index(a)];
    const std::size_t t = tgt[axis_index(a)];
    if (s == t) continue;
    const std::size_t big = std::max(s, t);
    const std::size_t small = std::min(s, t);
    if (small == 0 || big % small != 0 || !std::has_single_bit(big / small)) {
      fail(ErrorCode::NotPowerOfTwoRatio, std::string(axis_name(a)) + " " + std::to_string(s) +
                                              " -> " + std::to_string(t) +
                                              " is not a power-of-two ratio");
    }
    const Direction d = s > t ? Direction::large_to_small : Direction::small_to_large;
    if (plan.direction != Direction::neutral && plan.direction != d) {
      fail(ErrorCode::MixedDirection,
           format_dims(src) + " -> " + format_dims(tgt) + " shrinks some axes and grows others");
    }
    plan.direction = d;
    plan.spec[a] = static_cast<std::size_t>(std::countr_zero(big / small));
  }
  return plan;
}

}  // namespace wavexfer
