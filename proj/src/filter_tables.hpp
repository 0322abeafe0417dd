#pragma once

#include <array>
#include <span>

#include "wavexfer/filters.hpp"

namespace wavexfer::detail {

// Orthogonal rows leave rec_* empty; synthesis filters are the time reversal.
struct RawFilterTable {
  Family family;
  bool orthogonal;
  std::span<const double> dec_lo;
  std::span<const double> dec_hi;
  std::span<const double> rec_lo;
  std::span<const double> rec_hi;
};

const std::array<RawFilterTable, kFamilyCount>& raw_filter_tables();

}  // namespace wavexfer::detail
