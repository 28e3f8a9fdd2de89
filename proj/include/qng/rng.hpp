#pragma once

#include <cstdint>
#include <random>

namespace qng {

/// Seedable, portable random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Distributions are implemented here (not with <random>'s
/// distributions, whose algorithms are implementation-defined) so draws are
/// bit-identical across platforms.
///
/// Stream splitting: stream k of a base seed is seeded with
/// splitmix64(seed ^ splitmix64(k + 1)), so parallel draws indexed by k are
/// independent of scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box-Muller, cached second variate).
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace qng
