#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "wavexfer/checkpoint.hpp"
#include "wavexfer/consolidate.hpp"
#include "wavexfer/tensor.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

std::vector<double> normal_values(std::size_t n, Rng& rng);
wavexfer::Tensor3 random_tensor(const wavexfer::Dims& dims, Rng& rng);

/// Dims whose entries are drawn from `choices`.
wavexfer::Dims random_dims(Rng& rng, std::initializer_list<std::size_t> choices);

enum class ModelKind { bert, gpt, deit };

std::string_view preset_for(ModelKind kind);

/// Synthetic checkpoint with the tensor names a preset expects. Values are
/// cheap uniform noise derived from (seed, tensor name). `vocab` sizes the
/// embedding tables (class count for deit).
wavexfer::Checkpoint make_model(ModelKind kind, const wavexfer::Arch& arch, std::uint64_t seed,
                                std::size_t vocab = 100,
                                wavexfer::DType dtype = wavexfer::DType::f32);

/// A fresh path in the temp directory; the file is not created.
std::filesystem::path temp_path(std::string_view stem);

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);

}  // namespace testsupport
