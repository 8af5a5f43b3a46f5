// Copyright (c) 2026 serieslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "serieslab/process.hpp"

namespace serieslab {

struct EntropyEstimate {
  std::uint32_t n = 0;
  double plugin_rate = 0.0;        // H_emp(n-blocks) / n, bits per symbol
  double differential_rate = 0.0;  // H_emp(n-blocks) - H_emp((n-1)-blocks)
  std::uint64_t sample_length = 0;
};

/// Plain plug-in Shannon entropy of the empirical n-block distribution,
/// no bias correction. Guarded against undersampling:
/// n log2(alphabet) <= log2(L) - 4, which keeps the plug-in bias at the
/// scales used here below about a hundredth of a bit. Throws
/// std::invalid_argument("undersampled entropy") otherwise.
EntropyEstimate entropy_plugin(const SymbolSequence& seq, std::uint32_t n);

}  // namespace serieslab
