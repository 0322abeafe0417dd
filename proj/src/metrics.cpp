#include "wavexfer/metrics.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "wavexfer/error.hpp"

namespace wavexfer {

namespace {

bool meets(double value, double target, MetricDirection d) noexcept {
  return d == MetricDirection::lower_is_better ? value <= target : value >= target;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size() && !s.empty();
}

}  // namespace

MetricDirection parse_metric_direction(std::string_view name) {
  if (name == "lower") return MetricDirection::lower_is_better;
  if (name == "higher") return MetricDirection::higher_is_better;
  fail(ErrorCode::InvalidArgument, "direction must be 'lower' or 'higher'");
}

TrainingCurve::TrainingCurve(std::vector<CurvePoint> points, MetricDirection direction)
    : points_(std::move(points)), direction_(direction) {
  if (points_.size() < 2) fail(ErrorCode::InvalidCurve, "a curve needs at least 2 points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const CurvePoint& p = points_[i];
    if (!std::isfinite(p.flops) || !std::isfinite(p.metric)) {
      fail(ErrorCode::InvalidCurve, "point " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(p.flops > points_[i - 1].flops)) {
      fail(ErrorCode::InvalidCurve, "flops must increase strictly (point " + std::to_string(i) + ")");
    }
  }
}

double first_crossing(const TrainingCurve& curve, double target) {
  const auto& pts = curve.points();
  const MetricDirection d = curve.direction();
  if (meets(pts.front().metric, target, d)) return pts.front().flops;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const CurvePoint& a = pts[i - 1];
    const CurvePoint& b = pts[i];
    if (!meets(b.metric, target, d)) continue;
    if (b.metric == target) return b.flops;
    const double t = (target - a.metric) / (b.metric - a.metric);
    return a.flops + t * (b.flops - a.flops);
  }
  fail(ErrorCode::TargetNotReached, "curve never reaches " + std::to_string(target));
}

double flops_saving_ratio(const TrainingCurve& scratch, const TrainingCurve& method, double target) {
  const double xs = first_crossing(scratch, target);
  const double xm = first_crossing(method, target);
  if (xs == 0.0) {
    if (xm == 0.0) return 0.0;
    fail(ErrorCode::InvalidCurve, "scratch curve reaches the target at 0 FLOPs");
  }
  return (xs - xm) / xs;
}

std::vector<CurvePoint> parse_curve_csv(std::string_view text) {
  std::vector<CurvePoint> points;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (trim(line).empty()) continue;
    const auto comma = line.find(',');
    CurvePoint p{};
    const bool ok = comma != std::string_view::npos && parse_double(line.substr(0, comma), p.flops) &&
                    parse_double(line.substr(comma + 1), p.metric);
    if (!ok) {
      double first = 0.0;
      if (line_no == 1 && !parse_double(line.substr(0, comma), first)) continue;  // header
      fail(ErrorCode::InvalidCurve, "line " + std::to_string(line_no) + ": expected 'flops,metric'");
    }
    points.push_back(p);
  }
  return points;
}

}  // namespace wavexfer
