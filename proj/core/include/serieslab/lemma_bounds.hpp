// Copyright (c) 2026 serieslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace serieslab {

/// Closed-form bounds for the integrated survival curve of a geometric
/// mixture F(t) = sum_k p(1-p)^{k-1} F^{(k)}(t/p), where each F^{(k)} has
/// mean k. Natural logarithms throughout.

/// (1 - e_p^{-t}) / ln(e_p) with e_p = (1-p)^{-1/p}. Valid as a bound on
/// the mixture curve only in the small-p regime; see
/// lemma0_periodic_envelope for the exact extremal curve. Switches to the
/// p -> 0 limit 1 - e^{-t} below p = 1e-12, where (1-p)^{-1/p} loses
/// precision. Domain: p in (0, 1), t >= 0.
double lemma0_smooth_bound(double p, double t);

/// Exact value of the extremal curve: the mixture G when every F^{(k)} is
/// the unit step at k, i.e. when the inner set is visited periodically.
///
///   integral over [0, t] of (1-p)^{floor(s/p)} ds
///     = [1 - (1-p)^m] + (t - m p) (1-p)^m,   m = floor(t/p).
///
/// No mean-k mixture curve can exceed this at any t. Domain: p in (0, 1],
/// t >= 0; p = 1 degenerates to min(t, 1).
double lemma0_periodic_envelope(double p, double t);

/// min(1, lemma0_smooth_bound(p, t) + p t). Decreases uniformly to
/// 1 - e^{-t} as p -> 0 and dominates the periodic envelope for small p,
/// which is what makes the smooth form usable.
double g_p_bound(double p, double t);

}  // namespace serieslab
