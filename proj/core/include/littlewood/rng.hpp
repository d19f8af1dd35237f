#pragma once

#include <cstdint>

namespace littlewood {

/// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based generator: output i of a stream is a pure function of
/// (key, i), so streams can be split and replayed without shared state.
/// With key = seed the outputs coincide with the SplitMix64 sequence.
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  explicit constexpr CounterRng(std::uint64_t seed) noexcept : key_(seed) {}

  /// Independent child stream; the same (seed, stream_id) always yields the
  /// same stream.
  constexpr CounterRng split(std::uint64_t stream_id) const noexcept {
    return CounterRng(mix64(key_ ^ mix64(stream_id + kGamma)) + kGamma, 0);
  }

  constexpr std::uint64_t at(std::uint64_t index) const noexcept {
    return mix64(key_ + (index + 1) * kGamma);
  }

  constexpr std::uint64_t next() noexcept { return at(counter_++); }

  constexpr std::uint64_t key() const noexcept { return key_; }
  constexpr std::uint64_t counter() const noexcept { return counter_; }

 private:
  constexpr CounterRng(std::uint64_t key, std::uint64_t counter) noexcept
      : key_(key), counter_(counter) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace littlewood
