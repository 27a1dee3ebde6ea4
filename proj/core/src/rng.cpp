#include "probrob/rng.hpp"

#include <cmath>
#include <numbers>

namespace probrob {

namespace {

__extension__ using uint128 = unsigned __int128;

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

inline PhiloxCounter philox_round(const PhiloxCounter& c, const PhiloxKey& k) {
  std::uint32_t hi0, lo0, hi1, lo1;
  mulhilo(kMul0, c[0], hi0, lo0);
  mulhilo(kMul1, c[2], hi1, lo1);
  return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key) noexcept {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    counter = philox_round(counter, key);
  }
  return counter;
}

SeededStream::SeededStream(std::uint64_t master_seed, std::uint64_t stream_index) noexcept
    : master_seed_(master_seed), stream_index_(stream_index) {}

void SeededStream::refill() noexcept {
  const PhiloxCounter counter{static_cast<std::uint32_t>(block_),
                              static_cast<std::uint32_t>(block_ >> 32),
                              static_cast<std::uint32_t>(stream_index_),
                              static_cast<std::uint32_t>(stream_index_ >> 32)};
  const PhiloxKey key{static_cast<std::uint32_t>(master_seed_),
                      static_cast<std::uint32_t>(master_seed_ >> 32)};
  buffer_ = philox4x32_10(counter, key);
  ++block_;
  cursor_ = 0;
}

std::uint64_t SeededStream::next_u64() noexcept {
  if (cursor_ >= 4) refill();
  const std::uint64_t lo = buffer_[cursor_];
  const std::uint64_t hi = buffer_[cursor_ + 1];
  cursor_ += 2;
  return (hi << 32) | lo;
}

double SeededStream::uniform() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededStream::uniform_open() noexcept {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double SeededStream::uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

double SeededStream::normal() noexcept {
  if (has_spare_normal_) {
    has_spare_normal_ = false;
    return spare_normal_;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform_open()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  spare_normal_ = radius * std::sin(angle);
  has_spare_normal_ = true;
  return radius * std::cos(angle);
}

double SeededStream::exponential() noexcept { return -std::log(uniform_open()); }

std::uint64_t SeededStream::below(std::uint64_t n) noexcept {
  // Lemire's nearly-divisionless rejection.
  std::uint64_t x = next_u64();
  uint128 m = static_cast<uint128>(x) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      x = next_u64();
      m = static_cast<uint128>(x) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace probrob
