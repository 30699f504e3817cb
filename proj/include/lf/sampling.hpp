#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lf/norms.hpp"

namespace lf {

namespace rng {

// SplitMix64-style finalizer; a bijection on 64-bit words.
std::uint64_t mix64(std::uint64_t z);

// FNV-1a over the bytes of a stream name.
std::uint64_t fnv1a(std::string_view text);

// Counter-based stream: draw k of stream (seed, name, index) is a pure
// function of those coordinates, so adding a consumer never shifts another
// stream and samples can be generated out of order.
struct Substream {
  std::uint64_t key = 0;
  std::uint64_t counter = 0;

  std::uint64_t next_u64();
  double next_unit();                    // uniform in [0, 1)
  double next_in(double lo, double hi);  // uniform in [lo, hi)
};

// Stream head for the index-th sample of a named stream. Each index owns a
// 2^24-draw block, far above any per-sample rejection budget.
Substream substream(std::uint64_t seed, std::string_view name, std::uint64_t index);

}  // namespace rng

struct ScaleRange {
  double min = 0.5;
  double max = 2.0;
};

struct SampleConfig {
  std::uint64_t seed = 0;
  std::size_t count = 1;
  double margin = 0.05;
  ScaleRange scale_range{};
  double collinear_fraction = 0.05;  // share of pairs forced to w = lambda v
};

// Throws argument_error unless count >= 1, margin in [0, 0.5),
// 0 < scale_range.min <= scale_range.max and collinear_fraction in [0, 1].
void validate(const SampleConfig& cfg);

struct SamplePair {
  Vector v;
  Vector w;
  bool collinear = false;  // built as w = lambda v
};

// The index-th vector of the named stream: family-specific interior
// construction, rescaled by homogeneity so F(v) is uniform over scale_range.
// Every returned vector satisfies domain_contains(spec, v, cfg.margin).
// Throws sampling_error when the per-sample rejection budget is exhausted.
Vector sample_vector(const NormSpec& spec, const SampleConfig& cfg,
                     std::size_t index, std::string_view stream = "v");

// cfg.count vectors from stream "v"; deterministic in (spec, cfg).
std::vector<Vector> sample_domain(const NormSpec& spec, const SampleConfig& cfg);

// cfg.count pairs from streams "v" and "w". Every stride-th pair, with
// stride = round(1 / collinear_fraction), is built collinear to exercise
// the equality branches of the inequality checks.
std::vector<SamplePair> sample_pairs(const NormSpec& spec, const SampleConfig& cfg);

// Line-delimited replay records: one JSON object per line carrying index and
// seed metadata plus the vectors, numbers at 17 significant digits.
std::string replay_lines(const SampleConfig& cfg, const std::vector<Vector>& samples);
std::string replay_lines(const SampleConfig& cfg, const std::vector<SamplePair>& pairs);

}  // namespace lf
