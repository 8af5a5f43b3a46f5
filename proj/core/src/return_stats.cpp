// Copyright (c) 2026 serieslab contributors
// SPDX-License-Identifier: Apache-2.0

#include "serieslab/return_stats.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace serieslab {

InsufficientOccurrences::InsufficientOccurrences(std::uint64_t count_, std::uint64_t needed_)
    : std::runtime_error("insufficient occurrences: " + std::to_string(count_) + " < " +
                         std::to_string(needed_)),
      count(count_),
      needed(needed_) {}

StepDistribution return_ecdf(const BlockStats& stats, std::uint64_t min_count) {
  return kth_return_ecdf(stats, 1, min_count > 0 ? min_count - 1 : 0);
}

StepDistribution kth_return_ecdf(const BlockStats& stats, std::uint32_t k,
                                 std::uint64_t min_count) {
  if (k == 0) throw std::invalid_argument("kth_return_ecdf: k must be >= 1");
  if (stats.count < min_count + k) throw InsufficientOccurrences(stats.count, min_count + k);
  std::vector<double> samples;
  samples.reserve(stats.count - k);
  for (std::size_t i = 0; i + k < stats.positions.size(); ++i)
    samples.push_back(stats.empirical_measure *
                      static_cast<double>(stats.positions[i + k] - stats.positions[i]));
  return ecdf_from_samples(samples);
}

StepDistribution hitting_ecdf(const SymbolSequence& seq, const BlockStats& stats,
                              std::uint64_t min_count) {
  if (stats.count < min_count) throw InsufficientOccurrences(stats.count, min_count);
  const std::uint64_t L = seq.size();
  const std::uint64_t n = stats.word.size();
  const std::uint64_t max_gap = stats.max_gap();
  if (L < n + max_gap + 1) throw InsufficientOccurrences(stats.count, min_count);
  const std::uint64_t domain = L - n - max_gap;  // start indices [0, domain)

  // Start indices mapping to occurrence p_j are [p_{j-1}, p_j - 1]
  // (and [0, p_0 - 1] for the first), each contributing one wait
  // w = p_j - i. Collect waits as one difference array.
  std::uint64_t max_wait = stats.positions.front() + 1;
  max_wait = std::max(max_wait, max_gap + 1);
  std::vector<std::int64_t> diff(max_wait + 2, 0);
  std::uint64_t total = 0;
  std::uint64_t range_begin = 0;
  for (const std::uint32_t p : stats.positions) {
    const std::uint64_t lo_i = range_begin;
    const std::uint64_t hi_i = std::min<std::uint64_t>(p > 0 ? p - 1 : 0, domain - 1);
    if (p > 0 && lo_i <= hi_i && lo_i < domain) {
      const std::uint64_t w_lo = p - hi_i;
      const std::uint64_t w_hi = p - lo_i;
      diff[w_lo] += 1;
      diff[w_hi + 1] -= 1;
      total += w_hi - w_lo + 1;
    }
    range_begin = p;
    if (range_begin >= domain) break;
  }
  if (total == 0) throw InsufficientOccurrences(stats.count, min_count);

  std::vector<Jump> jumps;
  std::int64_t running = 0;
  std::uint64_t cum = 0;
  for (std::uint64_t w = 1; w <= max_wait; ++w) {
    running += diff[w];
    if (running > 0) {
      cum += static_cast<std::uint64_t>(running);
      jumps.push_back({stats.empirical_measure * static_cast<double>(w),
                       static_cast<double>(cum) / static_cast<double>(total)});
    }
  }
  if (!jumps.empty()) jumps.back().cumulative = 1.0;
  return StepDistribution(std::move(jumps));
}

}  // namespace serieslab
