#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "wavexfer/container.hpp"
#include "wavexfer/error.hpp"
#include "wavexfer/metrics.hpp"
#include "wavexfer/transfer.hpp"

namespace wavexfer::cli {

namespace {

struct TransferArgs {
  std::string src, policy, out, wavelet = "haar", padding = "zero";
  std::size_t layers = 0, hidden = 0, ffn = 0;
  std::uint64_t seed = 0;
  double gain = 1.0;
};

struct InspectArgs {
  std::string src, policy;
};

struct VerifyArgs {
  std::string src, policy, wavelet = "haar";
};

struct FlopsArgs {
  std::string scratch, method, direction = "lower";
  double target = 0.0;
};

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoFailure, "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string axes_text(const AxisSet& axes) {
  std::string s;
  for (Axis a : kAxes) {
    if (!axes.contains(a)) continue;
    if (!s.empty()) s += ",";
    s += axis_name(a);
  }
  return s.empty() ? "-" : s;
}

std::string arch_text(const Arch& a) {
  return "L=" + std::to_string(a.layers) + " hidden=" + std::to_string(a.hidden) +
         " ffn=" + std::to_string(a.ffn);
}

// First preset that claims at least one tensor.
GroupPolicy default_policy(const Checkpoint& ckpt) {
  for (auto name : preset_names()) {
    GroupPolicy p = preset_policy(name);
    for (const auto& [tensor, entry] : ckpt) {
      if (p.rule_for(tensor) != nullptr) return p;
    }
  }
  fail(ErrorCode::InvalidPolicy, "no preset matches these tensor names; pass --policy");
}

int cmd_transfer(const TransferArgs& a, std::ostream& err) {
  namespace fs = std::filesystem;
  if (fs::exists(a.out) && fs::exists(a.src) && fs::equivalent(a.out, a.src)) {
    fail(ErrorCode::InvalidArgument, "--out must differ from --src");
  }
  const Checkpoint src = load_container(a.src);
  const GroupPolicy policy = resolve_policy(a.policy);
  TransferOptions opts;
  opts.family = parse_family(a.wavelet);
  opts.padding = DetailPadding{parse_padding(a.padding), a.seed};
  opts.gain = a.gain;
  const Arch tgt{a.layers, a.hidden, a.ffn != 0 ? a.ffn : 4 * a.hidden};

  std::vector<ModuleReport> report;
  const Checkpoint out = transfer(src, policy, tgt, opts, &report);
  save_container(out, a.out);

  err << std::left << std::setw(14) << "group" << std::setw(18) << "src" << std::setw(10)
      << "levels" << std::setw(18) << "tgt" << "direction\n";
  for (const ModuleReport& r : report) {
    err << std::setw(14) << r.group << std::setw(18) << format_dims(r.src_dims) << std::setw(10)
        << format_levels(r.spec) << std::setw(18) << format_dims(r.tgt_dims)
        << direction_name(r.direction) << "\n";
  }
  err << out.size() << " tensors written to " << a.out << "\n";
  return 0;
}

int cmd_inspect(const InspectArgs& a, std::ostream& out) {
  const Checkpoint ckpt = load_container(a.src);
  out << ckpt.size() << " tensors\n";
  for (const auto& [name, e] : ckpt) {
    out << name << "  " << dtype_name(e.dtype) << "  " << format_shape(e.shape()) << "\n";
  }
  if (a.policy.empty()) return 0;
  const GroupPolicy policy = resolve_policy(a.policy);
  const ConsolidatedModel model = consolidate(ckpt, policy);
  out << "policy " << policy.name << "\n";
  for (const auto& [group, m] : model.modules) {
    out << "group " << group << "  " << format_dims(m.weights.dims()) << "  axes "
        << axes_text(m.transform_axes) << "\n";
  }
  for (const auto& [name, e] : model.residual) out << "residual " << name << "\n";
  out << arch_text(model.arch) << "\n";
  return 0;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Checkpoint ckpt = load_container(a.src);
  const GroupPolicy policy = a.policy.empty() ? default_policy(ckpt) : resolve_policy(a.policy);
  const Family family = parse_family(a.wavelet);
  const FilterBank& bank = get_filter_bank(family);
  const double tol = family == Family::dmey ? 1e-5 : 1e-6;
  const ConsolidatedModel model = consolidate(ckpt, policy);

  bool ok = true;
  std::size_t checked = 0, skipped = 0;
  for (const auto& [group, m] : model.modules) {
    const Dims& d = m.weights.dims();
    out << group << "  " << format_dims(d) << "  ";
    if (d[0] % 2 != 0 || d[1] % 2 != 0 || d[2] % 2 != 0) {
      out << "skipped (odd dims)\n";
      ++skipped;
      continue;
    }
    const double e = max_abs_difference(idwt3d(dwt3d(m.weights, bank), bank), m.weights);
    const bool pass = e <= tol;
    ok = ok && pass;
    ++checked;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", e);
    out << "max_abs_error " << buf << (pass ? "  ok\n" : "  FAIL\n");
  }
  out << (ok ? "PASS" : "FAIL") << ": " << checked << " checked, " << skipped << " skipped, "
      << family_name(family) << "\n";
  return ok ? 0 : 1;
}

void print_filter(std::ostream& out, std::string_view label, std::span<const double> f) {
  out << label;
  char buf[40];
  for (double v : f) {
    std::snprintf(buf, sizeof buf, " %.17g", v);
    out << buf;
  }
  out << "\n";
}

int cmd_filters(const std::string& family, std::ostream& out) {
  const FilterBank& bank = get_filter_bank(parse_family(family));
  print_filter(out, "dec_lo", bank.dec_lo);
  print_filter(out, "dec_hi", bank.dec_hi);
  print_filter(out, "rec_lo", bank.rec_lo);
  print_filter(out, "rec_hi", bank.rec_hi);
  return 0;
}

int cmd_flops(const FlopsArgs& a, std::ostream& out) {
  const MetricDirection dir = parse_metric_direction(a.direction);
  const TrainingCurve scratch(parse_curve_csv(read_text(a.scratch)), dir);
  const TrainingCurve method(parse_curve_csv(read_text(a.method)), dir);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f\n", flops_saving_ratio(scratch, method, a.target));
  out << buf;
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wavelet checkpoint rescaling", "wavexfer"};
  app.require_subcommand(1);

  TransferArgs ta;
  auto* transfer_cmd = app.add_subcommand("transfer", "Rescale a checkpoint to a target architecture");
  transfer_cmd->add_option("--src", ta.src, "Source container")->required();
  transfer_cmd->add_option("--policy", ta.policy, "Preset name or policy JSON file")->required();
  transfer_cmd->add_option("--target-layers", ta.layers)->required()->check(CLI::PositiveNumber);
  transfer_cmd->add_option("--target-hidden", ta.hidden)->required()->check(CLI::PositiveNumber);
  transfer_cmd->add_option("--target-ffn", ta.ffn, "Defaults to 4 x hidden")->check(CLI::PositiveNumber);
  transfer_cmd->add_option("--wavelet", ta.wavelet)->capture_default_str();
  transfer_cmd->add_option("--padding", ta.padding, "zero, gaussian or uniform")->capture_default_str();
  transfer_cmd->add_option("--seed", ta.seed)->capture_default_str();
  transfer_cmd->add_option("--gain", ta.gain)->capture_default_str();
  transfer_cmd->add_option("--out", ta.out, "Output container")->required();

  InspectArgs ia;
  auto* inspect_cmd = app.add_subcommand("inspect", "List tensors and, with a policy, groups");
  inspect_cmd->add_option("--src", ia.src)->required();
  inspect_cmd->add_option("--policy", ia.policy);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Round-trip every module through dwt3d/idwt3d");
  verify_cmd->add_option("--src", va.src)->required();
  verify_cmd->add_option("--wavelet", va.wavelet)->capture_default_str();
  verify_cmd->add_option("--policy", va.policy, "Defaults to the first matching preset");

  std::string family;
  auto* filters_cmd = app.add_subcommand("filters", "Print a filter bank");
  filters_cmd->add_option("--family", family)->required();

  FlopsArgs fa;
  auto* flops_cmd = app.add_subcommand("flops", "FLOPs saving ratio from two curve CSVs");
  flops_cmd->add_option("--scratch", fa.scratch)->required();
  flops_cmd->add_option("--method", fa.method)->required();
  flops_cmd->add_option("--target", fa.target)->required();
  flops_cmd->add_option("--direction", fa.direction, "lower or higher")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*transfer_cmd) return cmd_transfer(ta, err);
    if (*inspect_cmd) return cmd_inspect(ia, out);
    if (*verify_cmd) return cmd_verify(va, out);
    if (*filters_cmd) return cmd_filters(family, out);
    return cmd_flops(fa, out);
  } catch (const Error& e) {
    err << "error: " << one_line(e.what()) << "\n";
  } catch (const std::exception& e) {
    err << "error: Internal: " << one_line(e.what()) << "\n";
  }
  return 1;
}

}  // namespace wavexfer::cli
