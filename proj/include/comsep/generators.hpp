#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "comsep/kirchberger.hpp"
#include "comsep/realizable.hpp"

namespace comsep {

/// SplitMix64 (Steele, Lea, Flood 2014). The state advances by the golden
/// gamma 0x9E3779B97F4A7C15 and each output is the state passed through the
/// finalizer z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
/// z *= 0x94D049BB133111EB; z ^= z >> 31. Fixed here so corpora replay by
/// seed on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform integer in [lo, hi] by rejection sampling.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin(std::uint64_t numerator, std::uint64_t denominator);

 private:
  std::uint64_t state_;
};

/// Stream for instance `index` of `seed`.
SplitMix64 instance_rng(std::uint64_t seed, std::uint64_t index);

struct CorpusSpec {
  std::uint64_t seed = 7;
  std::size_t count = 300;
  std::size_t max_points = 7;
  std::size_t max_dim = 3;
  std::int64_t coord_bound = 3;
  std::size_t minor_depth = 3;
  /// When false, only linear_om bases are drawn.
  bool allow_affine = true;
  /// When false, the minor chain uses contractions and deletions only.
  bool allow_halfspace = true;

  void validate() const;
};

/// m distinct integer points in [-B, B]^d with uniformly drawn V/W labels.
/// About one configuration in four is snapped onto the hyperplane
/// x_d = x_1 (or onto a line when d = 1 is impossible to snap).
PointConfiguration random_point_config(std::uint64_t seed, std::uint64_t index, std::size_t m, std::size_t d,
                                       std::int64_t bound);

struct CorpusInstance {
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  SignSystem system;
  /// Human-readable construction, e.g. "affine(m=5,d=2) /{p3} reorient{p1}".
  std::string recipe;
  bool om = false;
  bool simple = false;
  /// |E| = rank + 1; false for the empty system.
  bool circuit_sized = false;
};

CorpusInstance generate_instance(const CorpusSpec& spec, std::uint64_t index);
std::vector<CorpusInstance> com_corpus(const CorpusSpec& spec);

/// Full partitions (V, W) of E in order of increasing W mask; only those
/// with the first element in V when -L = L. Requires a nonempty system.
std::vector<SeparationQuery> all_targets(const SignSystem& m);

}  // namespace comsep
