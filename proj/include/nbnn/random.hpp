#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <utility>

namespace nbnn {

/// Stream tags used to derive independent substreams from one seed.
enum class Stream : std::uint64_t {
  train_sample = 1,
  test_sample = 2,
  cv_folds = 3,
  split = 4,
};

/// One step of SplitMix64. Advances `state`.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Mixes a seed with a path of integers (trial index, stream tag, ...) into
/// a new 64-bit seed. A fixed function of its inputs on every platform.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) noexcept;

/// Portable random source. The engine is std::mt19937_64, whose output
/// sequence the standard pins down; all derived draws (bounded integers,
/// uniforms, normals) are implemented here rather than with the
/// implementation-defined std:: distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound), bound >= 1. Rejection sampling, no modulo bias.
  std::uint64_t uniform_index(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Standard normal deviate by the Marsaglia polar method.
  double normal();

  /// Fisher-Yates shuffle.
  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_index(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace nbnn
