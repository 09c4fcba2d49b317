#ifndef SPACINGS_RNG_HPP
#define SPACINGS_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

#include "spacings/detail/special_functions.hpp"

// Reproducible parallel Monte Carlo streams.  A stream is derived from a
// (master seed, stream index) pair, so replicate i always sees the same
// substream no matter how replicates are scheduled across workers.

namespace spacings {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// xoshiro256++ with splitmix64 seeding.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream() : RngStream(0, 0) {}

  RngStream(std::uint64_t master_seed, std::uint64_t stream_index) {
    std::uint64_t sm = master_seed ^ (0x6a09e667f3bcc909ULL +
                                      stream_index * 0x9e3779b97f4a7c15ULL);
    for (auto& w : state_) w = detail::splitmix64(sm);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<std::uint64_t>::max();
  }

  result_type operator()() {
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

  /// Uniform draw in the open interval (0, 1).
  double u01() {
    for (;;) {
      double u = static_cast<double>((*this)() >> 11) * 0x1.0p-53;
      if (u > 0.0) return u;
    }
  }

  double exp1() { return -std::log(u01()); }

  double normal() { return special::normal_quantile(u01()); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> state_;
};

inline RngStream make_stream(std::uint64_t master_seed,
                             std::uint64_t stream_index) {
  return RngStream(master_seed, stream_index);
}

}  // namespace spacings

#endif  // SPACINGS_RNG_HPP
