#pragma once

#include <cstdint>

namespace vesselmc {

// Counter-based uniform random stream keyed by (seed, stream_index).
//
// Output n of a stream is a pure function of (seed, stream_index, n): the
// key is hashed from seed and stream index, then each draw pushes the
// counter along a Weyl sequence and applies the splitmix64 finalizer.
// The same (seed, stream_index) therefore yields the same sequence on
// every platform and at any parallelism level, and distinct stream
// indices give statistically independent streams that can be consumed
// concurrently without coordination.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_index)
      : seed_(seed),
        stream_index_(stream_index),
        key_(mix64(seed + 0x9e3779b97f4a7c15ull) ^
             mix64(stream_index ^ 0xbf58476d1ce4e5b9ull)),
        counter_(0) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  // Number of values drawn so far.
  std::uint64_t draws() const { return counter_; }

  std::uint64_t next_u64() {
    ++counter_;
    return mix64(key_ + counter_ * 0x9e3779b97f4a7c15ull);
  }

  // Uniform in the open interval (0, 1), using the top 53 bits. Never
  // returns 0 or 1, so quantile-based sampling is total.
  double next_uniform() {
    const double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
    return (static_cast<double>(next_u64() >> 11) + 0.5) * kInv53;
  }

 private:
  // splitmix64 finalizer (Vigna / Steele-Lea-Flood).
  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t stream_index_;
  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace vesselmc
