#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace levystore {

// Splittable random stream: xoshiro256++ seeded through splitmix64 key
// chaining. Substreams are derived from (seed, path components), so every
// segment and replica gets an independent, order-independent stream and
// paths are reproducible bit-for-bit across platforms.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) {
    std::uint64_t s = key;
    for (auto& word : state_) word = splitmix64(s);
  }

  static std::uint64_t derive_key(std::uint64_t key,
                                  std::initializer_list<std::uint64_t> path) {
    for (std::uint64_t component : path) {
      std::uint64_t s = key ^ (0x9e3779b97f4a7c15ULL + component);
      key = splitmix64(s) ^ (component * 0xbf58476d1ce4e5b9ULL);
    }
    return key;
  }

  static RngStream substream(std::uint64_t key,
                             std::initializer_list<std::uint64_t> path) {
    return RngStream(derive_key(key, path));
  }

  std::uint64_t next_u64() {
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

  // uniform on [0,1), 53-bit resolution
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double exponential(double mean) {
    // 1 - uniform01() is in (0,1], so the log is finite
    return -mean * std::log(1.0 - uniform01());
  }

  double normal() {
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  static std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

// Stream roles used when deriving substreams for a simulated path.
namespace stream_role {
inline constexpr std::uint64_t durations = 1;
inline constexpr std::uint64_t down_segment = 2;
inline constexpr std::uint64_t up_segment = 3;
}  // namespace stream_role

inline std::uint64_t replica_seed(std::uint64_t master_seed,
                                  std::uint64_t replica_index) {
  return RngStream::derive_key(master_seed, {0x5eedULL, replica_index});
}

}  // namespace levystore
