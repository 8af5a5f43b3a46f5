// Copyright (c) 2026 serieslab contributors
// SPDX-License-Identifier: Apache-2.0

#include "serieslab/process.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace serieslab {

namespace {

constexpr double kProbTol = 1e-12;
constexpr std::uint64_t kExample1EnumLimit = 100000;

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void check_prob_vector(const std::vector<double>& p, const std::string& field) {
  require(!p.empty(), field + ": must be nonempty");
  double sum = 0.0;
  for (double v : p) {
    require(std::isfinite(v) && v >= 0.0, field + ": entries must be finite and >= 0");
    sum += v;
  }
  require(std::abs(sum - 1.0) <= kProbTol, field + ": must sum to 1");
}

std::uint64_t example1_base_size(const Example1Spec& s) {
  return static_cast<std::uint64_t>(
      std::floor(static_cast<double>(s.alphabet_size) * std::exp2(-s.entropy_gap)));
}

struct Validator {
  void operator()(const BernoulliSpec& s) const {
    check_prob_vector(s.probabilities, "probabilities");
  }
  void operator()(const MarkovSpec& s) const {
    const std::size_t k = s.transition.size();
    require(k >= 1, "transition: must be nonempty");
    for (const auto& row : s.transition) {
      require(row.size() == k, "transition: must be square");
      check_prob_vector(row, "transition row");
    }
    if (s.initial) {
      require(s.initial->size() == k, "initial: size must match transition");
      check_prob_vector(*s.initial, "initial");
    }
  }
  void operator()(const PeriodicSpec& s) const {
    require(!s.word.empty(), "word: must be nonempty");
  }
  void operator()(const SturmianSpec& s) const {
    require(s.slope > 0.0 && s.slope < 1.0, "slope: must lie in (0, 1)");
  }
  void operator()(const Example1Spec& s) const {
    const std::uint64_t base = example1_base_size(s);
    require(base >= 2, "alphabet_size/entropy_gap: floor(N 2^-gap) must be >= 2");
    require(s.marker_count >= 2, "marker_count: must be >= 2");
    require(base + s.marker_count <= s.alphabet_size,
            "alphabet_size: too small for base symbols plus markers");
    require(s.block_length >= 2, "block_length: must be >= 2");
    double words = std::pow(static_cast<double>(base), s.block_length - 1);
    if (!(words <= static_cast<double>(kExample1EnumLimit)))
      throw std::invalid_argument("construction too large");
  }
  void operator()(const Example2Spec& s) const {
    require(s.alphabet_size >= 2, "alphabet_size: must be >= 2");
    require(s.forbidden_words.size() >= 2, "forbidden_words: need r >= 2");
    const std::size_t l = s.forbidden_words.front().size();
    require(l >= 2, "forbidden_words: length must be >= 2");
    std::set<std::vector<Symbol>> seen;
    for (const auto& w : s.forbidden_words) {
      require(w.size() == l, "forbidden_words: must share one length");
      for (Symbol c : w) require(c < s.alphabet_size, "forbidden_words: symbol out of range");
      require(seen.insert(w).second, "forbidden_words: must be pairwise distinct");
    }
    const std::uint64_t n = s.inner_scale;
    require(n >= 2, "inner_scale: must be >= 2");
    require(s.component_length >= n * n, "component_length: must be >= inner_scale^2");
    require(s.component_length * l <= 20000000ull, "construction too large");
  }
  void operator()(const Example3Spec& s) const {
    const std::size_t k = s.block_lengths.size();
    require(k >= 1 && k <= 20, "block_lengths: need 1 to 20 levels");
    require(s.repetitions.size() == k, "repetitions: size must match block_lengths");
    require(s.block_lengths[0] >= 1, "block_lengths: p_1 must be >= 1");
    std::uint64_t unit = 0;
    for (std::size_t j = 0; j < k; ++j) {
      require(s.repetitions[j] >= 2, "repetitions: q must be >= 2");
      if (s.mirrored)
        require(s.repetitions[j] == 2, "repetitions: mirrored variant requires q == 2");
      if (j > 0) {
        require(s.block_lengths[j] % unit == 0,
                "block_lengths: p_k must be a multiple of p_{k-1} q_{k-1}");
      }
      const double grown = static_cast<double>(s.block_lengths[j]) * s.repetitions[j];
      require(grown < 9e15, "block_lengths: level bookkeeping overflow");
      unit = s.block_lengths[j] * s.repetitions[j];
    }
  }
};

struct AlphabetOf {
  std::uint32_t operator()(const BernoulliSpec& s) const {
    return static_cast<std::uint32_t>(s.probabilities.size());
  }
  std::uint32_t operator()(const MarkovSpec& s) const {
    return static_cast<std::uint32_t>(s.transition.size());
  }
  std::uint32_t operator()(const PeriodicSpec& s) const {
    Symbol mx = 0;
    for (Symbol c : s.word) mx = std::max(mx, c);
    return mx + 1;
  }
  std::uint32_t operator()(const SturmianSpec&) const { return 2; }
  std::uint32_t operator()(const Example1Spec& s) const { return s.alphabet_size; }
  std::uint32_t operator()(const Example2Spec& s) const { return s.alphabet_size; }
  std::uint32_t operator()(const Example3Spec&) const { return 2; }
};

struct NameOf {
  std::string operator()(const BernoulliSpec&) const { return "bernoulli"; }
  std::string operator()(const MarkovSpec&) const { return "markov"; }
  std::string operator()(const PeriodicSpec&) const { return "periodic"; }
  std::string operator()(const SturmianSpec&) const { return "sturmian"; }
  std::string operator()(const Example1Spec&) const { return "example1"; }
  std::string operator()(const Example2Spec&) const { return "example2"; }
  std::string operator()(const Example3Spec&) const { return "example3"; }
};

}  // namespace

void validate(const ProcessSpec& spec) { std::visit(Validator{}, spec); }

std::uint32_t alphabet_size(const ProcessSpec& spec) { return std::visit(AlphabetOf{}, spec); }

std::string variant_name(const ProcessSpec& spec) { return std::visit(NameOf{}, spec); }

}  // namespace serieslab
