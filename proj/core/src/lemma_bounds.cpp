// Copyright (c) 2026 serieslab contributors
// SPDX-License-Identifier: Apache-2.0

#include "serieslab/lemma_bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace serieslab {

namespace {

void check_t(double t) {
  if (!(t >= 0.0)) throw std::domain_error("lemma0 bounds: t must be >= 0");
}

}  // namespace

double lemma0_smooth_bound(double p, double t) {
  check_t(t);
  if (!(p > 0.0) || !(p < 1.0))
    throw std::domain_error("lemma0_smooth_bound: p must lie in (0, 1)");
  if (p < 1e-12) return -std::expm1(-t);
  // ln(e_p) = -ln(1-p)/p; e_p^{-t} = exp(t ln(1-p)/p). With
  // L = ln(1-p)/p < 0 the bound collapses to expm1(t L)/L, which stays
  // accurate for small p.
  const double L = std::log1p(-p) / p;
  return std::expm1(t * L) / L;
}

double lemma0_periodic_envelope(double p, double t) {
  check_t(t);
  if (!(p > 0.0) || !(p <= 1.0))
    throw std::domain_error("lemma0_periodic_envelope: p must lie in (0, 1]");
  const double m = std::floor(t / p);
  const double q = std::pow(1.0 - p, m);  // pow(0, 0) == 1 covers p = 1, t < 1
  double rem = t - m * p;
  if (rem < 0.0) rem = 0.0;  // guard against floor rounding at segment ends
  if (rem > p) rem = p;
  return (1.0 - q) + rem * q;
}

double g_p_bound(double p, double t) {
  const double v = lemma0_smooth_bound(p, t) + p * t;
  return v < 1.0 ? v : 1.0;
}

}  // namespace serieslab
