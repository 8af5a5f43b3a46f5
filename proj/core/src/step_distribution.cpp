// Copyright (c) 2026 serieslab contributors
// SPDX-License-Identifier: Apache-2.0

#include "serieslab/step_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace serieslab {

namespace {

void validate(const std::vector<Jump>& jumps) {
  double prev_value = -1.0;
  double prev_cum = 0.0;
  for (const Jump& j : jumps) {
    if (!std::isfinite(j.value) || j.value < 0.0)
      throw std::invalid_argument("StepDistribution: jump values must be finite and >= 0");
    if (j.value <= prev_value)
      throw std::invalid_argument("StepDistribution: jump values must be strictly increasing");
    if (j.cumulative < prev_cum - 1e-15 || j.cumulative > 1.0 + 1e-12)
      throw std::invalid_argument("StepDistribution: cumulative probabilities must be nondecreasing and <= 1");
    prev_value = j.value;
    prev_cum = j.cumulative;
  }
}

}  // namespace

StepDistribution::StepDistribution(std::vector<Jump> jumps) : jumps_(std::move(jumps)) {
  validate(jumps_);
}

double StepDistribution::operator()(double t) const {
  // Largest jump with value <= t.
  auto it = std::upper_bound(jumps_.begin(), jumps_.end(), t,
                             [](double x, const Jump& j) { return x < j.value; });
  if (it == jumps_.begin()) return 0.0;
  return std::prev(it)->cumulative;
}

double StepDistribution::left_limit(double t) const {
  auto it = std::lower_bound(jumps_.begin(), jumps_.end(), t,
                             [](const Jump& j, double x) { return j.value < x; });
  if (it == jumps_.begin()) return 0.0;
  return std::prev(it)->cumulative;
}

double StepDistribution::mean() const {
  if (jumps_.empty()) return std::numeric_limits<double>::infinity();
  if (total_mass() < 1.0 - 1e-12) return std::numeric_limits<double>::infinity();
  // integral of 1-F: sum over segments [v_i, v_{i+1}) of (1 - c_i) plus
  // the initial segment [0, v_0) where F = 0.
  double acc = jumps_.front().value;
  for (std::size_t i = 0; i + 1 < jumps_.size(); ++i)
    acc += (1.0 - jumps_[i].cumulative) * (jumps_[i + 1].value - jumps_[i].value);
  return acc;
}

double StepDistribution::sup_distance(double (*target)(double)) const {
  double sup = 0.0;
  double prev_cum = 0.0;
  for (const Jump& j : jumps_) {
    const double ft = target(j.value);
    sup = std::max(sup, std::abs(j.cumulative - ft));  // at the jump
    sup = std::max(sup, std::abs(prev_cum - ft));      // just before it
    prev_cum = j.cumulative;
  }
  // Tail: F stays at total mass while the target increases to 1.
  sup = std::max(sup, std::abs(1.0 - total_mass()));
  if (!jumps_.empty()) sup = std::max(sup, std::abs(total_mass() - target(jumps_.back().value)));
  return sup;
}

StepDistribution ecdf_from_samples(std::span<const double> samples,
                                   std::span<const double> weights) {
  if (samples.empty()) throw std::invalid_argument("insufficient data");
  if (!weights.empty() && weights.size() != samples.size())
    throw std::invalid_argument("ecdf_from_samples: weights size mismatch");

  std::vector<std::pair<double, double>> pts(samples.size());
  double total = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double v = samples[i];
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("ecdf_from_samples: samples must be finite and >= 0");
    const double w = weights.empty() ? 1.0 : weights[i];
    if (w < 0.0) throw std::invalid_argument("ecdf_from_samples: negative weight");
    pts[i] = {v, w};
    total += w;
  }
  if (total <= 0.0) throw std::invalid_argument("ecdf_from_samples: zero total weight");

  std::sort(pts.begin(), pts.end());
  std::vector<Jump> jumps;
  jumps.reserve(pts.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    acc += pts[i].second;
    if (i + 1 < pts.size() && pts[i + 1].first == pts[i].first) continue;
    jumps.push_back({pts[i].first, acc / total});
  }
  jumps.back().cumulative = 1.0;  // guard against rounding in the last sum
  return StepDistribution(std::move(jumps));
}

StepDistribution mixture(std::span<const std::pair<double, const StepDistribution*>> parts) {
  if (parts.empty()) throw std::invalid_argument("mixture: no components");
  double total = 0.0;
  for (const auto& [w, d] : parts) {
    if (w < 0.0 || d == nullptr) throw std::invalid_argument("mixture: bad component");
    total += w;
  }
  if (total <= 0.0) throw std::invalid_argument("mixture: zero total weight");

  // Gather every (value, mass increment) atom, then merge equal values.
  std::vector<std::pair<double, double>> atoms;
  for (const auto& [w, d] : parts) {
    double prev = 0.0;
    for (const Jump& j : d->jumps()) {
      atoms.emplace_back(j.value, (j.cumulative - prev) * w / total);
      prev = j.cumulative;
    }
  }
  std::sort(atoms.begin(), atoms.end());
  std::vector<Jump> jumps;
  double acc = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    acc += atoms[i].second;
    if (i + 1 < atoms.size() && atoms[i + 1].first == atoms[i].first) continue;
    jumps.push_back({atoms[i].first, acc});
  }
  return StepDistribution(std::move(jumps));
}

}  // namespace serieslab
