// Copyright (c) 2026 serieslab contributors
// SPDX-License-Identifier: Apache-2.0

#include "serieslab/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "serieslab/rng.hpp"

namespace serieslab {

namespace {

Symbol draw_from_cumulative(const std::vector<double>& cum, double u) {
  const auto it = std::upper_bound(cum.begin(), cum.end(), u);
  const std::size_t i = static_cast<std::size_t>(it - cum.begin());
  return static_cast<Symbol>(std::min(i, cum.size() - 1));
}

std::vector<double> cumulative(const std::vector<double>& p) {
  std::vector<double> cum(p.size());
  std::partial_sum(p.begin(), p.end(), cum.begin());
  cum.back() = 1.0;
  return cum;
}

std::vector<Symbol> gen_bernoulli(const BernoulliSpec& s, std::uint64_t length, std::uint64_t seed) {
  Xoshiro256 rng(sub_seed(seed, 0));
  const std::vector<double> cum = cumulative(s.probabilities);
  std::vector<Symbol> out(length);
  for (auto& c : out) c = draw_from_cumulative(cum, rng.next_double());
  return out;
}

// Stationary row vector of an ergodic stochastic matrix: solve
// (P^T - I) pi = 0 with the normalization sum(pi) = 1 spliced in as the
// last equation. Gaussian elimination with partial pivoting.
std::vector<double> stationary_distribution(const std::vector<std::vector<double>>& P) {
  const std::size_t k = P.size();
  std::vector<std::vector<double>> a(k, std::vector<double>(k + 1, 0.0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i][j] = P[j][i] - (i == j ? 1.0 : 0.0);
  for (std::size_t j = 0; j < k; ++j) a[k - 1][j] = 1.0;
  a[k - 1][k] = 1.0;

  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[piv], a[col]);
    if (std::abs(a[col][col]) < 1e-14)
      throw std::invalid_argument("transition: chain has no unique stationary distribution");
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= k; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<double> pi(k);
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    pi[i] = std::max(0.0, a[i][k] / a[i][i]);
    sum += pi[i];
  }
  for (double& v : pi) v /= sum;
  return pi;
}

std::vector<Symbol> gen_markov(const MarkovSpec& s, std::uint64_t length, std::uint64_t seed) {
  Xoshiro256 rng(sub_seed(seed, 0));
  const std::vector<double> init =
      s.initial ? *s.initial : stationary_distribution(s.transition);
  std::vector<std::vector<double>> rows;
  rows.reserve(s.transition.size());
  for (const auto& row : s.transition) rows.push_back(cumulative(row));
  const std::vector<double> init_cum = cumulative(init);

  std::vector<Symbol> out(length);
  Symbol state = draw_from_cumulative(init_cum, rng.next_double());
  for (std::uint64_t i = 0; i < length; ++i) {
    out[i] = state;
    state = draw_from_cumulative(rows[state], rng.next_double());
  }
  return out;
}

std::vector<Symbol> gen_periodic(const PeriodicSpec& s, std::uint64_t length) {
  std::vector<Symbol> out(length);
  for (std::uint64_t i = 0; i < length; ++i) out[i] = s.word[i % s.word.size()];
  return out;
}

std::vector<Symbol> gen_sturmian(const SturmianSpec& s, std::uint64_t length, std::uint64_t seed) {
  Xoshiro256 rng(sub_seed(seed, 0));
  const double phase = rng.next_double();
  std::vector<Symbol> out(length);
  double prev = std::floor(phase);
  for (std::uint64_t i = 0; i < length; ++i) {
    const double next = std::floor(s.slope * static_cast<double>(i + 1) + phase);
    out[i] = static_cast<Symbol>(next - prev);
    prev = next;
  }
  return out;
}

// ---- marker tower -------------------------------------------------------

std::vector<Symbol> gen_example1(const Example1Spec& s, std::uint64_t length, std::uint64_t seed) {
  const std::uint64_t base = static_cast<std::uint64_t>(
      std::floor(static_cast<double>(s.alphabet_size) * std::exp2(-s.entropy_gap)));
  const std::uint32_t n = s.block_length;
  std::uint64_t word_count = 1;
  for (std::uint32_t j = 0; j + 1 < n; ++j) word_count *= base;
  const std::uint64_t column_len = static_cast<std::uint64_t>(n) * word_count;
  const std::uint64_t period = column_len * s.marker_count;

  Xoshiro256 phase_rng(sub_seed(seed, 0));
  const std::uint64_t phase = phase_rng.next_below(period);

  std::vector<Symbol> out;
  out.reserve(length);
  std::vector<std::uint32_t> perm(word_count);
  std::uint64_t emitted = 0;  // symbols of the infinite concatenation produced so far
  for (std::uint64_t column = 0; emitted < phase + length; ++column) {
    const Symbol marker = static_cast<Symbol>(base + column % s.marker_count);
    std::iota(perm.begin(), perm.end(), 0u);
    Xoshiro256 rng(sub_seed(seed, 1 + column));
    for (std::uint64_t i = word_count - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.next_below(i + 1)]);
    for (std::uint64_t w = 0; w < word_count && emitted < phase + length; ++w) {
      // digits of the word index, most significant first, then the marker
      std::uint64_t x = perm[w];
      std::uint64_t pow = 1;
      for (std::uint32_t j = 0; j + 2 < n; ++j) pow *= base;
      for (std::uint32_t j = 0; j + 1 < n; ++j) {
        const Symbol c = static_cast<Symbol>(x / pow);
        x %= pow;
        pow = pow == 1 ? 1 : pow / base;
        if (emitted >= phase) out.push_back(c);
        if (++emitted >= phase + length) break;
      }
      if (emitted < phase + length) {
        if (emitted >= phase) out.push_back(marker);
        ++emitted;
      }
    }
  }
  out.resize(length);
  return out;
}

// ---- SFT components -----------------------------------------------------

// KMP automaton of one forbidden word: state = length of the longest
// suffix of the read text that is a prefix of w; state l means w occurred.
std::vector<std::uint32_t> kmp_transitions(const std::vector<Symbol>& w, std::uint32_t alphabet) {
  const std::uint32_t l = static_cast<std::uint32_t>(w.size());
  std::vector<std::uint32_t> fail(l, 0);
  for (std::uint32_t i = 1, k = 0; i < l; ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  std::vector<std::uint32_t> delta(static_cast<std::size_t>(l) * alphabet);
  for (std::uint32_t s = 0; s < l; ++s) {
    for (std::uint32_t a = 0; a < alphabet; ++a) {
      if (w[s] == a) {
        delta[s * alphabet + a] = s + 1;
      } else if (s == 0) {
        delta[a] = (w[0] == a) ? 1 : 0;
      } else {
        delta[s * alphabet + a] = delta[fail[s - 1] * alphabet + a];
      }
    }
  }
  return delta;
}

// Uniform sampler over the words of a fixed length avoiding one pattern.
// Backward completion counts per automaton state, renormalized each step
// so only ratios survive; the forward pass draws each symbol from the
// exact conditional distribution.
class AvoidingWordSampler {
 public:
  AvoidingWordSampler(std::vector<Symbol> word, std::uint32_t alphabet, std::uint64_t max_len)
      : word_(std::move(word)),
        alphabet_(alphabet),
        states_(static_cast<std::uint32_t>(word_.size())),
        delta_(kmp_transitions(word_, alphabet)),
        weight_(static_cast<std::size_t>(max_len + 1) * states_, 0.0) {
    for (std::uint32_t s = 0; s < states_; ++s) weight_[s] = 1.0;
    for (std::uint64_t d = 1; d <= max_len; ++d) {
      double mx = 0.0;
      for (std::uint32_t s = 0; s < states_; ++s) {
        double tot = 0.0;
        for (std::uint32_t a = 0; a < alphabet_; ++a) {
          const std::uint32_t ns = delta_[s * alphabet_ + a];
          if (ns < states_) tot += at(d - 1, ns);
        }
        at(d, s) = tot;
        mx = std::max(mx, tot);
      }
      if (mx == 0.0) throw std::runtime_error("SFT sampling infeasible for parameters");
      for (std::uint32_t s = 0; s < states_; ++s) at(d, s) /= mx;
    }
  }

  void sample(std::uint64_t len, Xoshiro256& rng, std::vector<Symbol>& out) const {
    std::uint32_t state = 0;
    std::vector<double> w(alphabet_);
    for (std::uint64_t i = 0; i < len; ++i) {
      const std::uint64_t d = len - i;
      double tot = 0.0;
      for (std::uint32_t a = 0; a < alphabet_; ++a) {
        const std::uint32_t ns = delta_[state * alphabet_ + a];
        w[a] = ns < states_ ? at(d - 1, ns) : 0.0;
        tot += w[a];
      }
      if (tot == 0.0) throw std::runtime_error("SFT sampling infeasible for parameters");
      double u = rng.next_double() * tot;
      std::uint32_t pick = alphabet_ - 1;
      for (std::uint32_t a = 0; a < alphabet_; ++a) {
        if (u < w[a]) {
          pick = a;
          break;
        }
        u -= w[a];
      }
      out.push_back(static_cast<Symbol>(pick));
      state = delta_[state * alphabet_ + pick];
    }
  }

 private:
  double& at(std::uint64_t d, std::uint32_t s) { return weight_[d * states_ + s]; }
  double at(std::uint64_t d, std::uint32_t s) const { return weight_[d * states_ + s]; }

  std::vector<Symbol> word_;
  std::uint32_t alphabet_;
  std::uint32_t states_;
  std::vector<std::uint32_t> delta_;
  std::vector<double> weight_;
};

std::vector<Symbol> gen_example2(const Example2Spec& s, std::uint64_t length, std::uint64_t seed) {
  const std::uint64_t m = s.component_length;
  std::vector<AvoidingWordSampler> samplers;
  samplers.reserve(s.forbidden_words.size());
  for (const auto& w : s.forbidden_words)
    samplers.emplace_back(w, s.alphabet_size, m + 1);

  std::vector<Symbol> out;
  out.reserve(length + m + 2);
  for (std::uint64_t c = 0; out.size() < length; ++c) {
    Xoshiro256 rng(sub_seed(seed, c));
    const std::uint64_t len = m + (rng.next() & 1u);  // m or m+1
    samplers[c % samplers.size()].sample(len, rng, out);
  }
  out.resize(length);
  return out;
}

// ---- stuttering ---------------------------------------------------------

std::vector<Symbol> stutter_level(const std::vector<Symbol>& in, std::uint64_t p,
                                  std::uint32_t q, bool mirrored) {
  const std::uint64_t blocks = in.size() / p;
  std::vector<Symbol> out;
  out.reserve(blocks * p * q);
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const Symbol* blk = in.data() + b * p;
    if (mirrored) {
      out.insert(out.end(), blk, blk + p);
      for (std::uint64_t i = 0; i < p; ++i) out.push_back(1u - blk[i]);
    } else {
      for (std::uint32_t r = 0; r < q; ++r) out.insert(out.end(), blk, blk + p);
    }
  }
  return out;
}

std::vector<Symbol> gen_example3(const Example3Spec& s, std::uint64_t length, std::uint64_t seed) {
  const std::size_t levels = s.block_lengths.size();
  // Work out how much input each level needs so the top emits `length`.
  std::vector<std::uint64_t> need(levels + 1);
  need[levels] = length;
  for (std::size_t j = levels; j-- > 0;) {
    const std::uint64_t p = s.block_lengths[j];
    const std::uint64_t q = s.repetitions[j];
    need[j] = (need[j + 1] / (p * q) + 2) * p;
  }
  Xoshiro256 rng(sub_seed(seed, 0));
  std::vector<Symbol> stream(need[0]);
  for (auto& c : stream) c = static_cast<Symbol>(rng.next() & 1u);
  for (std::size_t j = 0; j < levels; ++j)
    stream = stutter_level(stream, s.block_lengths[j], s.repetitions[j], s.mirrored);
  if (stream.size() < length) throw std::runtime_error("stuttering bookkeeping underflow");
  stream.resize(length);
  return stream;
}

}  // namespace

SymbolSequence generate(const ProcessSpec& spec, std::uint64_t length, std::uint64_t seed) {
  if (length < 1) throw std::invalid_argument("length: must be >= 1");
  validate(spec);

  SymbolSequence seq;
  seq.alphabet = alphabet_size(spec);
  seq.provenance = Provenance{spec, seed, length};
  seq.symbols = std::visit(
      [&](const auto& s) -> std::vector<Symbol> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, BernoulliSpec>) return gen_bernoulli(s, length, seed);
        else if constexpr (std::is_same_v<T, MarkovSpec>) return gen_markov(s, length, seed);
        else if constexpr (std::is_same_v<T, PeriodicSpec>) return gen_periodic(s, length);
        else if constexpr (std::is_same_v<T, SturmianSpec>) return gen_sturmian(s, length, seed);
        else if constexpr (std::is_same_v<T, Example1Spec>) return gen_example1(s, length, seed);
        else if constexpr (std::is_same_v<T, Example2Spec>) return gen_example2(s, length, seed);
        else return gen_example3(s, length, seed);
      },
      spec);
  return seq;
}

PeriodicSpec pair_stuttered_odometer(std::uint64_t block_length, std::uint64_t period) {
  if (block_length < 1 || period % block_length != 0)
    throw std::invalid_argument("block_length: must divide the period");
  std::vector<Symbol> word;
  word.reserve(2 * period);
  for (std::uint64_t b = 0; b < period / block_length; ++b)
    for (int copy = 0; copy < 2; ++copy)
      for (std::uint64_t i = 0; i < block_length; ++i)
        word.push_back(static_cast<Symbol>(b * block_length + i));
  return PeriodicSpec{std::move(word)};
}

}  // namespace serieslab
