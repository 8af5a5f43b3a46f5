// Copyright (c) 2026 serieslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>

#include "serieslab/block_scan.hpp"
#include "serieslab/step_distribution.hpp"

namespace serieslab {

/// Raised when a block does not have enough occurrences for the requested
/// statistic; carries the observed count.
class InsufficientOccurrences : public std::runtime_error {
 public:
  InsufficientOccurrences(std::uint64_t count, std::uint64_t needed);
  std::uint64_t count;
  std::uint64_t needed;
};

/// Empirical distribution of the normalized return time: the measure of
/// the block times each consecutive occurrence gap. Mean 1 up to
/// censoring, by the Kac identity.
StepDistribution return_ecdf(const BlockStats& stats, std::uint64_t min_count = 200);

/// Normalized k-th return: measure times (position_{i+k} - position_i).
/// k = 1 reproduces return_ecdf; the empirical mean is close to k.
StepDistribution kth_return_ecdf(const BlockStats& stats, std::uint32_t k,
                                 std::uint64_t min_count = 200);

/// Empirical distribution of the normalized waiting time until the block
/// is first seen, over every start index in [0, L - n - max_gap): from
/// there the next occurrence always arrives, so no wait is truncated.
/// Built from the gap structure (a wait of w at index i means the next
/// occurrence sits at i + w), not by rescanning the sample.
StepDistribution hitting_ecdf(const SymbolSequence& seq, const BlockStats& stats,
                              std::uint64_t min_count = 200);

}  // namespace serieslab
