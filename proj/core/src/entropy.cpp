// Copyright (c) 2026 serieslab contributors
// SPDX-License-Identifier: Apache-2.0

#include "serieslab/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace serieslab {

namespace {

// Empirical block entropy via a sorted code array; counts only, no
// positions. Falls back to an index sort for wide alphabets.
double block_entropy(const SymbolSequence& seq, std::uint32_t n) {
  if (n == 0) return 0.0;
  const std::uint64_t L = seq.size();
  const std::uint64_t windows = L - n + 1;
  const double dw = static_cast<double>(windows);

  unsigned sym_bits = 1;
  const std::uint64_t maxsym = seq.alphabet > 1 ? seq.alphabet - 1 : 1;
  while (sym_bits < 64 && (maxsym >> sym_bits) != 0) ++sym_bits;

  double H = 0.0;
  auto accumulate_run = [&](std::uint64_t cnt) {
    const double q = static_cast<double>(cnt) / dw;
    H -= q * std::log2(q);
  };

  if (static_cast<std::uint64_t>(n) * sym_bits <= 64) {
    const std::uint64_t mask =
        (n * sym_bits == 64) ? ~0ull : (1ull << (n * sym_bits)) - 1;
    std::vector<std::uint64_t> codes(windows);
    std::uint64_t code = 0;
    for (std::uint64_t i = 0; i + 1 < n; ++i) code = (code << sym_bits) | seq.symbols[i];
    for (std::uint64_t i = 0; i < windows; ++i) {
      code = ((code << sym_bits) | seq.symbols[i + n - 1]) & mask;
      codes[i] = code;
    }
    std::sort(codes.begin(), codes.end());
    std::uint64_t run = 1;
    for (std::uint64_t i = 1; i <= windows; ++i) {
      if (i < windows && codes[i] == codes[i - 1]) {
        ++run;
        continue;
      }
      accumulate_run(run);
      run = 1;
    }
  } else {
    const Symbol* s = seq.symbols.data();
    std::vector<std::uint32_t> idx(windows);
    for (std::uint64_t i = 0; i < windows; ++i) idx[i] = static_cast<std::uint32_t>(i);
    std::sort(idx.begin(), idx.end(), [s, n](std::uint32_t a, std::uint32_t b) {
      for (std::uint32_t j = 0; j < n; ++j)
        if (s[a + j] != s[b + j]) return s[a + j] < s[b + j];
      return false;
    });
    auto same = [s, n](std::uint32_t a, std::uint32_t b) {
      for (std::uint32_t j = 0; j < n; ++j)
        if (s[a + j] != s[b + j]) return false;
      return true;
    };
    std::uint64_t run = 1;
    for (std::uint64_t i = 1; i <= windows; ++i) {
      if (i < windows && same(idx[i], idx[i - 1])) {
        ++run;
        continue;
      }
      accumulate_run(run);
      run = 1;
    }
  }
  return H;
}

}  // namespace

EntropyEstimate entropy_plugin(const SymbolSequence& seq, std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("entropy_plugin: n must be >= 1");
  const std::uint64_t L = seq.size();
  if (L < 2 || n > L / 2) throw std::invalid_argument("undersampled entropy");
  const double alphabet = std::max<std::uint32_t>(2, seq.alphabet);
  if (static_cast<double>(n) * std::log2(alphabet) > std::log2(static_cast<double>(L)) - 4.0)
    throw std::invalid_argument("undersampled entropy");

  EntropyEstimate est;
  est.n = n;
  est.sample_length = L;
  const double hn = block_entropy(seq, n);
  const double hprev = n >= 2 ? block_entropy(seq, n - 1) : 0.0;
  est.plugin_rate = hn / static_cast<double>(n);
  est.differential_rate = hn - hprev;
  return est;
}

}  // namespace serieslab
