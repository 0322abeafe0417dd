#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wavexfer/consolidate.hpp"
#include "wavexfer/filters.hpp"

namespace wavexfer {

enum class PaddingStrategy { zero, gaussian, uniform };

std::string_view padding_name(PaddingStrategy s) noexcept;
/// Throws InvalidArgument.
PaddingStrategy parse_padding(std::string_view name);

struct DetailPadding {
  PaddingStrategy strategy = PaddingStrategy::zero;
  std::uint64_t seed = 0;
};

struct TransferOptions {
  Family family = Family::haar;
  DetailPadding padding;
  /// Multiplier on small-to-large output. Must be positive.
  double gain = 1.0;
};

/// `count` bands shaped like `low`. Zero padding yields exact zeros; the
/// random strategies draw N(0, s^2) or U(-s, s) with s the population
/// standard deviation of `low`, from a generator seeded with `stream`.
std::vector<Tensor3> make_detail_bands(const DetailPadding& padding, const Tensor3& low,
                                       std::size_t count, std::uint64_t stream);

/// Generator seed for one module and synthesis step.
std::uint64_t detail_stream(std::uint64_t seed, std::string_view group, std::size_t step) noexcept;

/// Shape a module takes under `tgt`. Transformed width axes map the ffn width
/// to the target ffn and multiples of hidden to the same multiple of the
/// target hidden. Throws ShapeInconsistent.
Dims target_module_dims(const Module& module, const Arch& src, const Arch& tgt);

struct ModuleReport {
  std::string group;
  Dims src_dims{};
  Dims tgt_dims{};
  LevelSpec spec;
  Direction direction = Direction::neutral;
};

struct TransferResult {
  ConsolidatedModel model;
  std::vector<ModuleReport> report;
  Direction direction = Direction::neutral;
};

/// Keeps the approximation band of every module. Throws NotPowerOfTwoRatio,
/// MixedDirection (a module would grow), ResidualShapeMismatch or InvalidArgument.
TransferResult l2s_transfer(const ConsolidatedModel& src, const Arch& tgt,
                            const TransferOptions& opts);

/// Synthesizes every module from its weights as approximation band plus
/// padded details, then scales by opts.gain.
TransferResult s2l_transfer(const ConsolidatedModel& src, const Arch& tgt,
                            const TransferOptions& opts);

/// consolidate -> pick direction -> l2s/s2l -> deconsolidate. A neutral
/// transfer takes the l2s path, so it reproduces the source bit-exactly.
Checkpoint transfer(const Checkpoint& src, const GroupPolicy& policy, const Arch& tgt,
                    const TransferOptions& opts, std::vector<ModuleReport>* report = nullptr);

}  // namespace wavexfer
