#include "wavexfer/checkpoint.hpp"

#include "wavexfer/error.hpp"

namespace wavexfer {

std::string_view dtype_name(DType dtype) noexcept {
  return dtype == DType::f32 ? "f32" : "f64";
}

std::size_t dtype_size(DType dtype) noexcept { return dtype == DType::f32 ? 4 : 8; }

std::vector<std::size_t> TensorEntry::shape() const {
  const Dims& d = values.dims();
  return std::vector<std::size_t>(d.end() - rank, d.end());
}

TensorEntry make_entry(DType dtype, const std::vector<std::size_t>& shape,
                       std::vector<double> values) {
  if (shape.empty() || shape.size() > 3) {
    fail(ErrorCode::ShapeMismatch, "rank " + std::to_string(shape.size()) + " is outside 1..3");
  }
  if (dtype == DType::f32) {
    for (double& v : values) v = static_cast<double>(static_cast<float>(v));
  }
  Dims dims{1, 1, 1};
  std::copy(shape.begin(), shape.end(), dims.end() - static_cast<std::ptrdiff_t>(shape.size()));
  return TensorEntry{dtype, static_cast<std::uint8_t>(shape.size()),
                     Tensor3(dims, std::move(values))};
}

void Checkpoint::insert(std::string name, TensorEntry entry) {
  auto [it, inserted] = entries_.try_emplace(std::move(name), std::move(entry));
  if (!inserted) fail(ErrorCode::DuplicateName, "tensor '" + it->first + "' already present");
}

const TensorEntry* Checkpoint::find(std::string_view name) const {
  const auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

const TensorEntry& Checkpoint::at(std::string_view name) const {
  const TensorEntry* e = find(name);
  if (e == nullptr) fail(ErrorCode::InvalidArgument, "no tensor named '" + std::string(name) + "'");
  return *e;
}

bool bit_equal(const Checkpoint& a, const Checkpoint& b) {
  if (a.size() != b.size()) return false;
  auto ib = b.begin();
  for (const auto& [name, entry] : a) {
    if (name != ib->first || entry.dtype != ib->second.dtype || entry.rank != ib->second.rank ||
        !(entry.values == ib->second.values)) {
      return false;
    }
    ++ib;
  }
  return true;
}

std::string format_shape(const std::vector<std::size_t>& shape) {
  std::string out = "(";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i != 0) out += ", ";
    out += std::to_string(shape[i]);
  }
  return out + ")";
}

}  // namespace wavexfer
