#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wavexfer/tensor.hpp"

namespace wavexfer {

enum class DType : std::uint8_t { f32 = 0, f64 = 1 };

std::string_view dtype_name(DType dtype) noexcept;
std::size_t dtype_size(DType dtype) noexcept;

/// One named parameter. `rank` is the original rank (1..3); the values live
/// in a Tensor3 whose leading (3 - rank) dims are 1.
struct TensorEntry {
  DType dtype = DType::f32;
  std::uint8_t rank = 1;
  Tensor3 values;

  std::vector<std::size_t> shape() const;
};

/// f32 values are rounded to the nearest float. Throws ShapeMismatch for an
/// empty or rank > 3 shape (zero dims are rejected by Tensor3).
TensorEntry make_entry(DType dtype, const std::vector<std::size_t>& shape,
                       std::vector<double> values);

/// Name-ordered parameter map. Names compare bytewise.
class Checkpoint {
 public:
  using Map = std::map<std::string, TensorEntry, std::less<>>;

  /// Throws DuplicateName.
  void insert(std::string name, TensorEntry entry);

  const TensorEntry* find(std::string_view name) const;
  const TensorEntry& at(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  Map::const_iterator begin() const noexcept { return entries_.begin(); }
  Map::const_iterator end() const noexcept { return entries_.end(); }

 private:
  Map entries_;
};

/// Same names, dtypes, ranks, dims and bit patterns.
bool bit_equal(const Checkpoint& a, const Checkpoint& b);

std::string format_shape(const std::vector<std::size_t>& shape);

}  // namespace wavexfer
