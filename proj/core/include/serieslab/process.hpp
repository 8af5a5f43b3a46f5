// Copyright (c) 2026 serieslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace serieslab {

using Symbol = std::uint32_t;

/// Independent draws from a fixed probability vector.
struct BernoulliSpec {
  std::vector<double> probabilities;
};

/// Finite-state chain; started from its stationary distribution unless an
/// initial distribution is given.
struct MarkovSpec {
  std::vector<std::vector<double>> transition;
  std::optional<std::vector<double>> initial;
};

/// Deterministic repetition of a fixed word, phase 0.
struct PeriodicSpec {
  std::vector<Symbol> word;
};

/// Binary coding of an irrational circle rotation; zero entropy,
/// aperiodic. Default slope is the golden ratio conjugate.
struct SturmianSpec {
  double slope = 0.6180339887498949;
};

/// Marker-tower construction: words of block_length symbols, the first
/// block_length-1 drawn from a base alphabet of size floor(N 2^{-gap}),
/// the last one of marker_count cyclically scheduled markers. Each tower
/// column concatenates every admissible word exactly once in a uniformly
/// random order.
struct Example1Spec {
  std::uint32_t alphabet_size;  // N
  double entropy_gap;           // delta, in bits
  std::uint32_t block_length;   // n
  std::uint32_t marker_count;   // r
};

/// Alternating concatenation of long components, component i sampled
/// uniformly among words avoiding forbidden_words[i] (one forbidden word
/// per component type, cycled). inner_scale is the designed block length
/// n whose window [n, n^2] the attracting check sweeps.
struct Example2Spec {
  std::uint32_t alphabet_size;
  std::vector<std::vector<Symbol>> forbidden_words;
  std::uint64_t component_length;  // m; components use m or m+1
  std::uint32_t inner_scale;       // n
};

/// Iterated stuttering of a fair-coin stream: at level k the stream is cut
/// into blocks of block_lengths[k] and each block is emitted
/// repetitions[k] times; the mirrored variant forces two repetitions and
/// emits block then symbolwise complement.
struct Example3Spec {
  std::vector<std::uint64_t> block_lengths;   // p_1 .. p_k (output-stream units)
  std::vector<std::uint32_t> repetitions;     // q_1 .. q_k
  bool mirrored = false;
};

using ProcessSpec = std::variant<BernoulliSpec, MarkovSpec, PeriodicSpec, SturmianSpec,
                                 Example1Spec, Example2Spec, Example3Spec>;

/// Throws std::invalid_argument naming the offending field.
void validate(const ProcessSpec& spec);

std::uint32_t alphabet_size(const ProcessSpec& spec);

/// Short stable tag for reports: "bernoulli", "markov", ...
std::string variant_name(const ProcessSpec& spec);

struct Provenance {
  ProcessSpec spec;
  std::uint64_t seed = 0;
  std::uint64_t length = 0;
};

/// A finite sample path plus everything needed to regenerate it
/// bit-identically.
struct SymbolSequence {
  std::uint32_t alphabet = 0;
  std::vector<Symbol> symbols;
  std::optional<Provenance> provenance;

  std::uint64_t size() const { return symbols.size(); }
};

}  // namespace serieslab
