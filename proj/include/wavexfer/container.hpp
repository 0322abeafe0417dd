#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "wavexfer/checkpoint.hpp"

namespace wavexfer {

/// "WGT1" container, version 1. See FORMAT.md for the byte layout.
inline constexpr std::uint32_t kContainerVersion = 1;

std::vector<std::uint8_t> encode_container(const Checkpoint& ckpt);

/// Throws BadMagic, UnsupportedVersion, TruncatedFile, OverlappingSegments,
/// NameOrderViolation or MalformedHeader. Never reads outside `bytes` and
/// never allocates more than the payload sizes present in `bytes`.
Checkpoint decode_container(std::span<const std::uint8_t> bytes);

/// Returns the number of bytes written. Throws IoFailure.
std::size_t write_container(const Checkpoint& ckpt, std::ostream& out);
Checkpoint read_container(std::istream& in);

void save_container(const Checkpoint& ckpt, const std::filesystem::path& path);
Checkpoint load_container(const std::filesystem::path& path);

}  // namespace wavexfer
