#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wavexfer/kernels.hpp"

namespace wavexfer {

/// Axes of a consolidated weight module: stacked layers, input width, output width.
enum class Axis : std::size_t { layers = 0, d_in = 1, d_out = 2 };

inline constexpr std::array<Axis, 3> kAxes = {Axis::layers, Axis::d_in, Axis::d_out};

using Dims = std::array<std::size_t, 3>;

constexpr std::size_t axis_index(Axis a) noexcept { return static_cast<std::size_t>(a); }

std::string_view axis_name(Axis a) noexcept;

/// "12x768x768"
std::string format_dims(const Dims& dims);

constexpr std::size_t element_count(const Dims& dims) noexcept {
  return dims[0] * dims[1] * dims[2];
}

/// Dense row-major rank-3 array. Rank-1/rank-2 data uses leading singleton dims.
class Tensor3 {
 public:
  Tensor3() : Tensor3(Dims{1, 1, 1}) {}
  /// Zero-filled. Throws NotPositiveShape when any dim is 0.
  explicit Tensor3(const Dims& dims);
  /// Throws NotPositiveShape, or ShapeMismatch when values.size() != product(dims).
  Tensor3(const Dims& dims, std::vector<double> values);

  const Dims& dims() const noexcept { return dims_; }
  std::size_t dim(Axis a) const noexcept { return dims_[axis_index(a)]; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }
  const std::vector<double>& vector() const noexcept { return values_; }

  double& operator()(std::size_t l, std::size_t i, std::size_t o) noexcept {
    return values_[(l * dims_[1] + i) * dims_[2] + o];
  }
  double operator()(std::size_t l, std::size_t i, std::size_t o) const noexcept {
    return values_[(l * dims_[1] + i) * dims_[2] + o];
  }

  /// Layout for filtering along `a`.
  AxisLayout layout(Axis a) const noexcept;

  /// Bitwise equality of dims and values.
  friend bool operator==(const Tensor3& a, const Tensor3& b) noexcept;

 private:
  Dims dims_;
  std::vector<double> values_;
};

double squared_norm(const Tensor3& t) noexcept;
double max_abs_difference(const Tensor3& a, const Tensor3& b);

}  // namespace wavexfer
