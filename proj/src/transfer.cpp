#include "wavexfer/transfer.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "wavexfer/error.hpp"

namespace wavexfer {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// [0, 1) with 53 random bits.
double unit(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

double population_std(const Tensor3& t) {
  const auto v = t.values();
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size()));
}

class PaddedDetails final : public DetailSource {
 public:
  PaddedDetails(const DetailPadding& padding, std::string_view group)
      : padding_(padding), group_(group) {}

  std::vector<std::optional<Tensor3>> bands(std::size_t step, const Tensor3& low,
                                            std::size_t count) override {
    std::vector<std::optional<Tensor3>> out(count);
    if (padding_.strategy == PaddingStrategy::zero) return out;
    auto drawn = make_detail_bands(padding_, low, count, detail_stream(padding_.seed, group_, step));
    for (std::size_t i = 0; i < count; ++i) out[i] = std::move(drawn[i]);
    return out;
  }

 private:
  DetailPadding padding_;
  std::string_view group_;
};

void check_options(const TransferOptions& opts) {
  if (!(opts.gain > 0.0) || !std::isfinite(opts.gain)) {
    fail(ErrorCode::InvalidArgument, "gain must be a positive finite number");
  }
}

std::size_t map_width(std::size_t s, const Arch& src, const Arch& tgt) {
  if (src.ffn != 0 && s == src.ffn) {
    if (tgt.ffn == 0) fail(ErrorCode::InvalidArgument, "target ffn width is not set");
    return tgt.ffn;
  }
  if (src.hidden != 0 && s % src.hidden == 0) {
    if (tgt.hidden == 0) fail(ErrorCode::InvalidArgument, "target hidden width is not set");
    return s / src.hidden * tgt.hidden;
  }
  fail(ErrorCode::ShapeInconsistent,
       "width " + std::to_string(s) + " is neither the ffn width " + std::to_string(src.ffn) +
           " nor a multiple of the hidden width " + std::to_string(src.hidden));
}

ModuleReport plan_module(const std::string& group, const Module& m, const Arch& src,
                         const Arch& tgt) {
  ModuleReport r;
  r.group = group;
  r.src_dims = m.weights.dims();
  try {
    r.tgt_dims = target_module_dims(m, src, tgt);
    const LevelPlan plan = infer_level_spec(r.src_dims, r.tgt_dims);
    r.spec = plan.spec;
    r.direction = plan.direction;
  } catch (const Error& e) {
    fail(e.code(), "group '" + group + "': " + e.detail());
  }
  return r;
}

void check_residual(const Checkpoint& residual, const Arch& src, const Arch& tgt) {
  for (const auto& [name, entry] : residual) {
    for (std::size_t d : entry.shape()) {
      const bool hidden_moves = src.hidden != 0 && d == src.hidden && tgt.hidden != src.hidden;
      const bool ffn_moves = src.ffn != 0 && d == src.ffn && tgt.ffn != src.ffn;
      if (hidden_moves || ffn_moves) {
        fail(ErrorCode::ResidualShapeMismatch,
             "untransformed tensor '" + name + "' " + format_shape(entry.shape()) +
                 " depends on a width that changes; add a policy rule for it");
      }
    }
  }
}

TransferResult run(const ConsolidatedModel& src, const Arch& tgt, const TransferOptions& opts,
                   Direction direction) {
  check_options(opts);
  check_residual(src.residual, src.arch, tgt);
  const FilterBank& bank = get_filter_bank(opts.family);
  const Direction wrong = direction == Direction::large_to_small ? Direction::small_to_large
                                                                 : Direction::large_to_small;

  TransferResult result;
  result.direction = Direction::neutral;
  for (const auto& [group, m] : src.modules) {
    ModuleReport r = plan_module(group, m, src.arch, tgt);
    if (r.direction == wrong) {
      fail(ErrorCode::MixedDirection, "group '" + group + "' " + format_dims(r.src_dims) + " -> " +
                                          format_dims(r.tgt_dims) + " runs against a " +
                                          std::string(direction_name(direction)) + " transfer");
    }
    if (r.direction != Direction::neutral) result.direction = direction;
    result.report.push_back(r);
  }

  result.model.residual = src.residual;
  result.model.arch = tgt;
  for (std::size_t i = 0; i < result.report.size(); ++i) {
    const ModuleReport& r = result.report[i];
    const Module& m = src.modules.find(r.group)->second;
    Module out = m;
    if (direction == Direction::large_to_small) {
      out.weights = analyze_to_approx(m.weights, r.spec, bank);
    } else {
      PaddedDetails details(opts.padding, r.group);
      out.weights = synthesize_from_approx(m.weights, r.spec, bank, details);
      if (opts.gain != 1.0) {
        for (double& v : out.weights.values()) v *= opts.gain;
      }
    }
    result.model.modules.emplace(r.group, std::move(out));
  }
  return result;
}

}  // namespace

std::string_view padding_name(PaddingStrategy s) noexcept {
  switch (s) {
    case PaddingStrategy::gaussian:
      return "gaussian";
    case PaddingStrategy::uniform:
      return "uniform";
    default:
      return "zero";
  }
}

PaddingStrategy parse_padding(std::string_view name) {
  if (name == "zero") return PaddingStrategy::zero;
  if (name == "gaussian") return PaddingStrategy::gaussian;
  if (name == "uniform") return PaddingStrategy::uniform;
  fail(ErrorCode::InvalidArgument,
       "unknown padding '" + std::string(name) + "' (zero, gaussian, uniform)");
}

std::uint64_t detail_stream(std::uint64_t seed, std::string_view group, std::size_t step) noexcept {
  return splitmix64(seed ^ fnv1a(group) ^ static_cast<std::uint64_t>(step));
}

std::vector<Tensor3> make_detail_bands(const DetailPadding& padding, const Tensor3& low,
                                       std::size_t count, std::uint64_t stream) {
  std::vector<Tensor3> bands(count, Tensor3(low.dims()));
  if (padding.strategy == PaddingStrategy::zero) return bands;

  const double sigma = population_std(low);
  std::mt19937_64 gen(stream);
  if (padding.strategy == PaddingStrategy::uniform) {
    for (Tensor3& b : bands) {
      for (double& v : b.values()) v = sigma * (2.0 * unit(gen()) - 1.0);
    }
    return bands;
  }
  // Box-Muller on raw 64-bit draws; both outputs of each pair are used.
  bool have_spare = false;
  double spare = 0.0;
  for (Tensor3& b : bands) {
    for (double& v : b.values()) {
      if (have_spare) {
        v = sigma * spare;
        have_spare = false;
        continue;
      }
      const double u1 = 1.0 - unit(gen());
      const double u2 = unit(gen());
      const double r = std::sqrt(-2.0 * std::log(u1));
      const double theta = 2.0 * std::numbers::pi * u2;
      v = sigma * r * std::cos(theta);
      spare = r * std::sin(theta);
      have_spare = true;
    }
  }
  return bands;
}

Dims target_module_dims(const Module& module, const Arch& src, const Arch& tgt) {
  Dims d = module.weights.dims();
  if (module.layered && d[0] != tgt.layers) {
    if (tgt.layers == 0) fail(ErrorCode::InvalidArgument, "target layer count is not set");
    if (!module.transform_axes.contains(Axis::layers)) {
      fail(ErrorCode::ShapeInconsistent, "layer count changes but L is not a transform axis");
    }
    d[0] = tgt.layers;
  }
  for (Axis a : {Axis::d_in, Axis::d_out}) {
    if (module.transform_axes.contains(a)) d[axis_index(a)] = map_width(d[axis_index(a)], src, tgt);
  }
  return d;
}

TransferResult l2s_transfer(const ConsolidatedModel& src, const Arch& tgt,
                            const TransferOptions& opts) {
  return run(src, tgt, opts, Direction::large_to_small);
}

TransferResult s2l_transfer(const ConsolidatedModel& src, const Arch& tgt,
                            const TransferOptions& opts) {
  return run(src, tgt, opts, Direction::small_to_large);
}

Checkpoint transfer(const Checkpoint& src, const GroupPolicy& policy, const Arch& tgt,
                    const TransferOptions& opts, std::vector<ModuleReport>* report) {
  const ConsolidatedModel model = consolidate(src, policy);
  bool grows = false;
  bool shrinks = false;
  for (const auto& [group, m] : model.modules) {
    const Direction d = plan_module(group, m, model.arch, tgt).direction;
    grows = grows || d == Direction::small_to_large;
    shrinks = shrinks || d == Direction::large_to_small;
  }
  if (grows && shrinks) {
    fail(ErrorCode::MixedDirection, "target " + std::to_string(tgt.layers) + " layers, hidden " +
                                        std::to_string(tgt.hidden) + ", ffn " +
                                        std::to_string(tgt.ffn) +
                                        " shrinks some modules and grows others");
  }
  TransferResult result =
      grows ? s2l_transfer(model, tgt, opts) : l2s_transfer(model, tgt, opts);
  if (report != nullptr) *report = std::move(result.report);
  return deconsolidate(result.model, policy);
}

}  // namespace wavexfer
