#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace llafusion {

// All randomness flows from std::mt19937_64, whose output sequence is fixed
// by the C++ standard. Real-valued variates are produced here rather than by
// <random> distributions, whose algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n) by rejection, unbiased.
  std::uint64_t below(std::uint64_t n);

  /// Standard normal via the Box-Muller transform; the second variate of each
  /// pair is cached so the stream is consumed two doubles at a time.
  double normal();

  Eigen::VectorXd normal_vector(Eigen::Index n);

  /// Fisher-Yates shuffle of 0..n-1.
  std::vector<std::size_t> permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Derives an independent stream seed from a master seed, a stage label and
/// an index: mix64(mix64(master ^ fnv1a(label)) + index * golden).
std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::uint64_t index = 0);

}  // namespace llafusion
