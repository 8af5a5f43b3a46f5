// Copyright (c) 2026 serieslab contributors
// SPDX-License-Identifier: Apache-2.0

#include "serieslab/block_scan.hpp"

#include <algorithm>
#include <stdexcept>

namespace serieslab {

namespace {

// Fast path: window code and start position packed into one u64, sorted
// flat. Usable whenever n * bits(alphabet) + bits(L) <= 64, which covers
// every small-alphabet scan; wide alphabets fall back to an index sort
// with lexicographic window comparison.
void scan_packed(const SymbolSequence& seq, std::uint32_t n, unsigned sym_bits,
                 unsigned pos_bits, BlockTable& table) {
  const std::uint64_t L = seq.size();
  const std::uint64_t windows = L - n + 1;
  const std::uint64_t code_mask = (n * sym_bits == 64) ? ~0ull : (1ull << (n * sym_bits)) - 1;

  std::vector<std::uint64_t> keys(windows);
  std::uint64_t code = 0;
  for (std::uint64_t i = 0; i + 1 < n; ++i) code = (code << sym_bits) | seq.symbols[i];
  for (std::uint64_t i = 0; i < windows; ++i) {
    code = ((code << sym_bits) | seq.symbols[i + n - 1]) & code_mask;
    keys[i] = (code << pos_bits) | i;
  }
  std::sort(keys.begin(), keys.end());

  const std::uint64_t pos_mask = (1ull << pos_bits) - 1;
  std::uint64_t run_begin = 0;
  for (std::uint64_t i = 1; i <= windows; ++i) {
    if (i < windows && (keys[i] >> pos_bits) == (keys[run_begin] >> pos_bits)) continue;
    const std::uint64_t cnt = i - run_begin;
    if (cnt >= table.min_count) {
      BlockStats b;
      b.count = cnt;
      b.empirical_measure = static_cast<double>(cnt) / static_cast<double>(windows);
      b.positions.reserve(cnt);
      for (std::uint64_t j = run_begin; j < i; ++j)
        b.positions.push_back(static_cast<std::uint32_t>(keys[j] & pos_mask));
      std::uint64_t c = keys[run_begin] >> pos_bits;
      b.word.resize(n);
      for (std::uint32_t j = n; j-- > 0;) {
        b.word[j] = static_cast<Symbol>(c & ((1ull << sym_bits) - 1));
        c >>= sym_bits;
      }
      table.blocks.push_back(std::move(b));
    } else {
      table.insufficient_blocks += 1;
      table.insufficient_windows += cnt;
    }
    run_begin = i;
  }
}

void scan_generic(const SymbolSequence& seq, std::uint32_t n, BlockTable& table) {
  const std::uint64_t L = seq.size();
  const std::uint64_t windows = L - n + 1;
  const Symbol* s = seq.symbols.data();

  std::vector<std::uint32_t> idx(windows);
  for (std::uint64_t i = 0; i < windows; ++i) idx[i] = static_cast<std::uint32_t>(i);
  std::sort(idx.begin(), idx.end(), [s, n](std::uint32_t a, std::uint32_t b) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (s[a + j] != s[b + j]) return s[a + j] < s[b + j];
    }
    return a < b;
  });

  auto same = [s, n](std::uint32_t a, std::uint32_t b) {
    for (std::uint32_t j = 0; j < n; ++j)
      if (s[a + j] != s[b + j]) return false;
    return true;
  };
  std::uint64_t run_begin = 0;
  for (std::uint64_t i = 1; i <= windows; ++i) {
    if (i < windows && same(idx[i], idx[run_begin])) continue;
    const std::uint64_t cnt = i - run_begin;
    if (cnt >= table.min_count) {
      BlockStats b;
      b.count = cnt;
      b.empirical_measure = static_cast<double>(cnt) / static_cast<double>(windows);
      b.positions.assign(idx.begin() + run_begin, idx.begin() + i);
      b.word.assign(s + idx[run_begin], s + idx[run_begin] + n);
      table.blocks.push_back(std::move(b));
    } else {
      table.insufficient_blocks += 1;
      table.insufficient_windows += cnt;
    }
    run_begin = i;
  }
}

}  // namespace

BlockTable scan_blocks(const SymbolSequence& seq, std::uint32_t n, std::uint64_t min_count) {
  if (n == 0) throw std::invalid_argument("scan_blocks: n must be >= 1");
  if (min_count < 2) throw std::invalid_argument("scan_blocks: min_count must be >= 2");
  const std::uint64_t L = seq.size();
  if (L == 0 || n > L / 10) throw std::invalid_argument("undersampled");
  if (L > (1ull << 32)) throw std::invalid_argument("scan_blocks: sequence too long for index");

  BlockTable table;
  table.n = n;
  table.sequence_length = L;
  table.window_count = L - n + 1;
  table.min_count = min_count;

  const auto bits_for = [](std::uint64_t maxval) {
    unsigned b = 1;
    while (b < 64 && (maxval >> b) != 0) ++b;
    return b;
  };
  const unsigned sym_bits = bits_for(seq.alphabet > 1 ? seq.alphabet - 1 : 1);
  const unsigned pos_bits = bits_for(table.window_count - 1);
  if (static_cast<std::uint64_t>(n) * sym_bits + pos_bits <= 64)
    scan_packed(seq, n, sym_bits, pos_bits, table);
  else
    scan_generic(seq, n, table);
  // Packed keys sort by (code, position): blocks come out ordered by code,
  // which matches lexicographic word order since codes are
  // most-significant-symbol first. The generic path compares words
  // directly. Either way the table order is deterministic.
  return table;
}

}  // namespace serieslab
