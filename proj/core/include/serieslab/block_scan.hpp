// Copyright (c) 2026 serieslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "serieslab/process.hpp"

namespace serieslab {

/// Occurrence record of one n-word. Occurrences are shift-orbit windows,
/// so a word may overlap itself; positions are strictly increasing start
/// indices.
struct BlockStats {
  std::vector<Symbol> word;
  std::vector<std::uint32_t> positions;
  std::uint64_t count = 0;
  double empirical_measure = 0.0;  // count / (L - n + 1)

  /// Consecutive position differences; count-1 entries. The censored gap
  /// from the last occurrence to the end of the sample is not a gap.
  std::vector<std::uint64_t> gaps() const {
    std::vector<std::uint64_t> g;
    g.reserve(positions.size() > 0 ? positions.size() - 1 : 0);
    for (std::size_t i = 1; i < positions.size(); ++i)
      g.push_back(std::uint64_t{positions[i]} - positions[i - 1]);
    return g;
  }
  std::uint64_t max_gap() const {
    std::uint64_t mx = 0;
    for (std::size_t i = 1; i < positions.size(); ++i)
      mx = std::max(mx, std::uint64_t{positions[i]} - positions[i - 1]);
    return mx;
  }
};

/// Scan result. Words meeting min_count carry full position lists and are
/// sorted lexicographically; rarer words are not materialized but their
/// counts stay in the measure accounting, so
///   analyzed_mass + insufficient_mass == 1 exactly (in window counts).
struct BlockTable {
  std::uint32_t n = 0;
  std::uint64_t sequence_length = 0;
  std::uint64_t window_count = 0;  // L - n + 1
  std::uint64_t min_count = 0;
  std::vector<BlockStats> blocks;
  std::uint64_t insufficient_blocks = 0;  // distinct words below min_count
  std::uint64_t insufficient_windows = 0; // their total occurrence count

  double analyzed_mass() const {
    return static_cast<double>(window_count - insufficient_windows) /
           static_cast<double>(window_count);
  }
  double insufficient_mass() const {
    return static_cast<double>(insufficient_windows) / static_cast<double>(window_count);
  }
};

/// Index every length-n window of the sample. Throws
/// std::invalid_argument("undersampled") when n > length/10.
BlockTable scan_blocks(const SymbolSequence& seq, std::uint32_t n, std::uint64_t min_count = 200);

}  // namespace serieslab
