#include "wavexfer/policy.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "wavexfer/error.hpp"

namespace wavexfer {

namespace {

using nlohmann::json;

constexpr std::string_view kPlaceholder = "{}";

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Axis parse_axis(const std::string& s) {
  if (s == "L") return Axis::layers;
  if (s == "Din") return Axis::d_in;
  if (s == "Dout") return Axis::d_out;
  fail(ErrorCode::InvalidPolicy, "unknown axis '" + s + "' (expected L, Din or Dout)");
}

DimSource parse_dim_source(const json& j) {
  if (!j.is_string()) fail(ErrorCode::InvalidPolicy, "arch entries must be \"group.axis\" strings");
  const auto text = j.get<std::string>();
  const auto dot = text.rfind('.');
  if (dot == std::string::npos) fail(ErrorCode::InvalidPolicy, "bad arch entry '" + text + "'");
  const std::string axis = text.substr(dot + 1);
  Axis a;
  if (axis == "din") {
    a = Axis::d_in;
  } else if (axis == "dout") {
    a = Axis::d_out;
  } else {
    fail(ErrorCode::InvalidPolicy, "arch entry '" + text + "' must end in .din or .dout");
  }
  return DimSource{text.substr(0, dot), a};
}

std::string dim_source_text(const DimSource& s) {
  return s.group + (s.axis == Axis::d_in ? ".din" : ".dout");
}

}  // namespace

bool GroupRule::layered() const noexcept {
  return pattern.find(kPlaceholder) != std::string::npos;
}

std::optional<std::size_t> GroupRule::match(std::string_view name) const {
  const auto pos = pattern.find(kPlaceholder);
  if (pos == std::string::npos) {
    if (name == pattern) return 0;
    return std::nullopt;
  }
  const std::string_view prefix = std::string_view(pattern).substr(0, pos);
  const std::string_view suffix = std::string_view(pattern).substr(pos + kPlaceholder.size());
  if (name.size() <= prefix.size() + suffix.size()) return std::nullopt;
  if (!name.starts_with(prefix) || !name.ends_with(suffix)) return std::nullopt;
  const std::string_view digits =
      name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
  // Canonical decimal only, so instantiate() reproduces the original name.
  if (!all_digits(digits) || (digits.size() > 1 && digits.front() == '0') || digits.size() > 9) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(std::stoul(std::string(digits)));
}

std::string GroupRule::instantiate(std::size_t layer) const {
  const auto pos = pattern.find(kPlaceholder);
  if (pos == std::string::npos) return pattern;
  return pattern.substr(0, pos) + std::to_string(layer) +
         pattern.substr(pos + kPlaceholder.size());
}

const GroupRule* GroupPolicy::rule_for(std::string_view tensor_name) const {
  for (const auto& r : rules) {
    if (r.match(tensor_name)) return &r;
  }
  return nullptr;
}

const GroupRule* GroupPolicy::rule_by_group(std::string_view group) const {
  for (const auto& r : rules) {
    if (r.group == group) return &r;
  }
  return nullptr;
}

GroupPolicy parse_policy(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::InvalidPolicy, std::string("malformed policy document: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::InvalidPolicy, "policy must be an object");

  GroupPolicy policy;
  try {
    policy.name = doc.value("name", std::string{});
    const std::string passthrough = doc.value("passthrough", std::string{"copy"});
    if (passthrough == "copy") {
      policy.passthrough = Passthrough::copy;
    } else if (passthrough == "error") {
      policy.passthrough = Passthrough::error;
    } else {
      fail(ErrorCode::InvalidPolicy, "passthrough must be \"copy\" or \"error\"");
    }
    if (doc.contains("arch")) {
      const json& arch = doc.at("arch");
      if (arch.contains("hidden")) policy.hidden = parse_dim_source(arch.at("hidden"));
      if (arch.contains("ffn")) policy.ffn = parse_dim_source(arch.at("ffn"));
    }
    if (!doc.contains("rules") || !doc.at("rules").is_array()) {
      fail(ErrorCode::InvalidPolicy, "policy needs a \"rules\" array");
    }
    std::set<std::string> groups;
    for (const json& r : doc.at("rules")) {
      GroupRule rule;
      rule.pattern = r.at("pattern").get<std::string>();
      rule.group = r.at("group").get<std::string>();
      if (rule.pattern.empty() || rule.group.empty()) {
        fail(ErrorCode::InvalidPolicy, "rules need a non-empty pattern and group");
      }
      const auto first = rule.pattern.find(kPlaceholder);
      if (first != std::string::npos &&
          rule.pattern.find(kPlaceholder, first + kPlaceholder.size()) != std::string::npos) {
        fail(ErrorCode::InvalidPolicy, "pattern '" + rule.pattern + "' has more than one {}");
      }
      if (!groups.insert(rule.group).second) {
        fail(ErrorCode::InvalidPolicy, "group '" + rule.group + "' is used by two rules");
      }
      if (r.contains("transform_axes")) {
        rule.transform_axes = AxisSet{};
        for (const json& a : r.at("transform_axes")) rule.transform_axes.insert(parse_axis(a));
      }
      policy.rules.push_back(std::move(rule));
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidPolicy, std::string("policy field error: ") + e.what());
  }
  return policy;
}

std::string policy_to_json(const GroupPolicy& policy) {
  json doc;
  doc["name"] = policy.name;
  doc["passthrough"] = policy.passthrough == Passthrough::copy ? "copy" : "error";
  if (policy.hidden || policy.ffn) {
    json arch = json::object();
    if (policy.hidden) arch["hidden"] = dim_source_text(*policy.hidden);
    if (policy.ffn) arch["ffn"] = dim_source_text(*policy.ffn);
    doc["arch"] = arch;
  }
  doc["rules"] = json::array();
  for (const auto& r : policy.rules) {
    json axes = json::array();
    for (Axis a : kAxes) {
      if (r.transform_axes.contains(a)) axes.push_back(std::string(axis_name(a)));
    }
    doc["rules"].push_back({{"pattern", r.pattern}, {"group", r.group}, {"transform_axes", axes}});
  }
  return doc.dump(2) + "\n";
}

GroupPolicy resolve_policy(std::string_view name_or_path) {
  const auto names = preset_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) {
    return preset_policy(name_or_path);
  }
  std::ifstream in{std::filesystem::path(name_or_path)};
  if (!in) {
    fail(ErrorCode::IoFailure, "cannot open policy '" + std::string(name_or_path) +
                                   "' (not a preset or readable file)");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_policy(text.str());
}

}  // namespace wavexfer
