#include "wavexfer/tensor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include "wavexfer/error.hpp"

namespace wavexfer {

std::string_view axis_name(Axis a) noexcept {
  switch (a) {
    case Axis::layers: return "L";
    case Axis::d_in: return "Din";
    case Axis::d_out: return "Dout";
  }
  return "?";
}

std::string format_dims(const Dims& dims) {
  return std::to_string(dims[0]) + "x" + std::to_string(dims[1]) + "x" + std::to_string(dims[2]);
}

namespace {

void require_positive(const Dims& dims) {
  if (dims[0] == 0 || dims[1] == 0 || dims[2] == 0) {
    fail(ErrorCode::NotPositiveShape, "dims " + format_dims(dims) + " contain a zero");
  }
}

}  // namespace

Tensor3::Tensor3(const Dims& dims) : dims_(dims) {
  require_positive(dims_);
  values_.assign(element_count(dims_), 0.0);
}

Tensor3::Tensor3(const Dims& dims, std::vector<double> values)
    : dims_(dims), values_(std::move(values)) {
  require_positive(dims_);
  if (values_.size() != element_count(dims_)) {
    fail(ErrorCode::ShapeMismatch, std::to_string(values_.size()) + " values for dims " +
                                       format_dims(dims_));
  }
}

AxisLayout Tensor3::layout(Axis a) const noexcept {
  switch (a) {
    case Axis::layers: return {1, dims_[0], dims_[1] * dims_[2]};
    case Axis::d_in: return {dims_[0], dims_[1], dims_[2]};
    case Axis::d_out: return {dims_[0] * dims_[1], dims_[2], 1};
  }
  return {};
}

bool operator==(const Tensor3& a, const Tensor3& b) noexcept {
  if (a.dims_ != b.dims_) return false;
  return std::equal(a.values_.begin(), a.values_.end(), b.values_.begin(),
                    [](double x, double y) {
                      return std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(y);
                    });
}

double squared_norm(const Tensor3& t) noexcept {
  double sum = 0.0;
  for (double v : t.values()) sum += v * v;
  return sum;
}

double max_abs_difference(const Tensor3& a, const Tensor3& b) {
  if (a.dims() != b.dims()) {
    fail(ErrorCode::ShapeMismatch, format_dims(a.dims()) + " vs " + format_dims(b.dims()));
  }
  double worst = 0.0;
  const auto av = a.values();
  const auto bv = b.values();
  for (std::size_t i = 0; i < av.size(); ++i) worst = std::max(worst, std::abs(av[i] - bv[i]));
  return worst;
}

}  // namespace wavexfer
