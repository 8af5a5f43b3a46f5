// Copyright (c) 2026 serieslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "serieslab/process.hpp"

namespace serieslab {

/// Draw a sample path of the requested length. Deterministic in
/// (spec, seed, length); sub-streams follow the sub_seed scheme in
/// rng.hpp. Markov chains start from their stationary distribution when
/// no initial one is given; the marker tower starts at a uniformly random
/// phase of its period.
SymbolSequence generate(const ProcessSpec& spec, std::uint64_t length, std::uint64_t seed);

/// Periodic word realizing a single-scale odometer stuttered in pairs:
/// the base word 0, 1, ..., period-1 (every window of it unique per
/// period) cut into blocks of block_length, each block emitted twice.
/// Every short window of the result recurs as a periodically repeated
/// pair, the gap pattern behind the min(1, t/2) survival curve.
PeriodicSpec pair_stuttered_odometer(std::uint64_t block_length, std::uint64_t period);

}  // namespace serieslab
