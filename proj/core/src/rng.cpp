#include "tsforest/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace tsforest {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t splitmix_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Collapses (a, b) into one well-mixed 64-bit key.
inline std::uint64_t mix_pair(std::uint64_t a, std::uint64_t b) {
  return splitmix_finalize(splitmix_finalize(a + kGolden) ^
                           splitmix_finalize(b + 0x5851F42D4C957F2Dull));
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

RngStream::RngStream(std::uint64_t derived_key) : key_(derived_key) {
  // splitmix64 expansion of the key into the 256-bit xoshiro state
  std::uint64_t s = derived_key;
  for (auto& word : state_) {
    s += kGolden;
    word = splitmix_finalize(s);
  }
  if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
    state_[0] = kGolden;
  }
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : RngStream(mix_pair(seed, stream_id)) {}

RngStream RngStream::substream(std::uint64_t child_id) const {
  return RngStream(mix_pair(key_, child_id));
}

std::uint64_t RngStream::next_u64() {
  // xoshiro256++
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RngStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::uniform_below(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("RngStream::uniform_below: n must be positive");
  }
  // Lemire's multiply-shift with rejection; exact uniformity.
  unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next_u64()) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double RngStream::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  double u = 0.0, v = 0.0, s = 0.0;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  cached_normal_ = v * f;
  has_cached_normal_ = true;
  return u * f;
}

std::uint64_t RngStream::geometric(double p) {
  if (!(p > 0.0)) {
    throw std::invalid_argument("RngStream::geometric: p must be in (0, 1]");
  }
  if (p >= 1.0) {
    return 1;
  }
  // Inverse CDF on {1, 2, ...}: ceil(log(1-U) / log(1-p)).
  const double u = uniform01();
  const double draw = std::ceil(std::log1p(-u) / std::log1p(-p));
  return draw < 1.0 ? 1 : static_cast<std::uint64_t>(draw);
}

}  // namespace tsforest
