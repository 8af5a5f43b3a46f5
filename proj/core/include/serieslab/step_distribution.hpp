// Copyright (c) 2026 serieslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace serieslab {

/// One jump of a right-continuous step CDF: F(t) == cumulative for
/// t in [value, next value).
struct Jump {
  double value;
  double cumulative;
};

/// A distribution function on [0, inf) that is constant between finitely
/// many jump points. Values are strictly increasing, cumulative
/// probabilities nondecreasing; the final cumulative equals the total mass
/// carried by finite values (1 for a proper empirical distribution).
///
/// Everything downstream (integrated survival curves, intensity
/// extraction) relies on this representation being exact, so there is no
/// binning or smoothing anywhere in this class.
class StepDistribution {
 public:
  explicit StepDistribution(std::vector<Jump> jumps);

  /// Right-continuous evaluation: F(t) = cumulative of the largest jump
  /// point <= t, and 0 before the first jump.
  double operator()(double t) const;

  /// Left limit F(t-): cumulative of the largest jump point strictly < t.
  double left_limit(double t) const;

  std::span<const Jump> jumps() const { return jumps_; }
  double total_mass() const { return jumps_.empty() ? 0.0 : jumps_.back().cumulative; }
  double max_value() const { return jumps_.empty() ? 0.0 : jumps_.back().value; }

  /// mean = integral of 1-F over [0, inf). Infinite when total mass < 1.
  double mean() const;

  /// sup_t |F(t) - target(t)| against a continuous nondecreasing CDF with
  /// target(inf) = 1. The supremum of the difference against a step
  /// function is attained at a jump point (from either side) or in the
  /// tail, so this is exact.
  double sup_distance(double (*target)(double)) const;

 private:
  std::vector<Jump> jumps_;
};

/// Empirical CDF with equal mass per sample, or explicit nonnegative
/// weights (normalized to total mass 1). Duplicate sample values merge
/// into a single jump. Throws std::invalid_argument("insufficient data")
/// on an empty sample list.
StepDistribution ecdf_from_samples(std::span<const double> samples,
                                   std::span<const double> weights = {});

/// Convex combination of step distributions; weights are normalized to 1.
StepDistribution mixture(std::span<const std::pair<double, const StepDistribution*>> parts);

}  // namespace serieslab
