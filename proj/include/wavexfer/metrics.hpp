#pragma once

#include <string_view>
#include <vector>

namespace wavexfer {

enum class MetricDirection { lower_is_better, higher_is_better };

/// Throws InvalidArgument for anything but "lower" or "higher".
MetricDirection parse_metric_direction(std::string_view name);

struct CurvePoint {
  double flops;
  double metric;
};

/// Throws InvalidCurve unless there are at least two points with finite,
/// strictly increasing FLOPs and finite metrics.
class TrainingCurve {
 public:
  TrainingCurve(std::vector<CurvePoint> points, MetricDirection direction);

  const std::vector<CurvePoint>& points() const noexcept { return points_; }
  MetricDirection direction() const noexcept { return direction_; }

 private:
  std::vector<CurvePoint> points_;
  MetricDirection direction_;
};

/// Smallest FLOPs at which the curve meets or beats `target`, interpolating
/// linearly inside the first bracketing segment. Throws TargetNotReached.
double first_crossing(const TrainingCurve& curve, double target);

/// (scratch - method) / scratch over first crossings. Negative when the
/// method needs more compute. Throws TargetNotReached, or InvalidCurve when
/// scratch reaches the target at 0 FLOPs and the method does not.
double flops_saving_ratio(const TrainingCurve& scratch, const TrainingCurve& method, double target);

/// Two columns "flops,metric". A first line whose first field is not a
/// number is a header; blank lines are ignored. Throws InvalidCurve with the
/// line number.
std::vector<CurvePoint> parse_curve_csv(std::string_view text);

}  // namespace wavexfer
