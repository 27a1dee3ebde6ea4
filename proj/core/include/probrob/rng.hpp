#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace probrob {

/// Philox-4x32-10 block function (Salmon et al., Random123).  Maps a 128-bit
/// counter and a 64-bit key to 128 pseudo-random bits.
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key) noexcept;

/// Counter-based random stream.  The sequence depends only on
/// (master_seed, stream_index), so stream k of a seed can be regenerated on
/// any thread in any order.
///
/// Scalar variates are produced by this class directly rather than through
/// <random> distributions so that draw sequences are bit-identical across
/// standard library implementations.
class SeededStream {
 public:
  using result_type = std::uint64_t;

  SeededStream(std::uint64_t master_seed, std::uint64_t stream_index) noexcept;

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t stream_index() const noexcept { return stream_index_; }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() noexcept { return next_u64(); }

  std::uint64_t next_u64() noexcept;

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Uniform on (0, 1); never returns 0, safe for log().
  double uniform_open() noexcept;
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) noexcept;
  /// Standard normal via Box-Muller; consumes two uniforms per pair.
  double normal() noexcept;
  /// Exponential with unit rate.
  double exponential() noexcept;
  /// Uniform integer on [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) noexcept;

 private:
  void refill() noexcept;

  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::uint64_t block_ = 0;
  PhiloxCounter buffer_{};
  int cursor_ = 4;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace probrob
