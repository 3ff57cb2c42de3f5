#pragma once

// All randomness in the library flows through Rng: a std::mt19937_64 engine
// whose state is expanded from a 64-bit seed with SplitMix64. Child streams
// are split off by hashing (seed, keys...) so that trial seeds are a pure
// function of their coordinates. Bounded integers and unit doubles are drawn
// with explicit formulas rather than <random> distributions, which keeps
// sequences identical across standard library implementations.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace minbucket {

using Seed = std::uint64_t;

constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Mixes a seed with a list of coordinates into a new seed.
constexpr Seed derive_seed(Seed seed, std::initializer_list<std::uint64_t> keys) noexcept {
  std::uint64_t state = seed;
  std::uint64_t out = splitmix64(state);
  for (std::uint64_t k : keys) {
    state ^= k + 0x632be59bd9b4e019ULL + (out << 6) + (out >> 2);
    out = splitmix64(state);
  }
  return out;
}

class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(Seed seed) : seed_(seed) {
    std::uint64_t state = seed;
    std::array<std::uint32_t, 8> words{};
    for (std::size_t i = 0; i < words.size(); i += 2) {
      const std::uint64_t x = splitmix64(state);
      words[i] = static_cast<std::uint32_t>(x);
      words[i + 1] = static_cast<std::uint32_t>(x >> 32);
    }
    std::seed_seq seq(words.begin(), words.end());
    engine_.seed(seq);
  }

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  Seed seed() const noexcept { return seed_; }

  Rng split(std::uint64_t key) const { return Rng(derive_seed(seed_, {key})); }

  /// Uniform integer in [0, bound), bound > 0 (Lemire's multiply-shift with rejection).
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t x = engine_();
    unsigned __int128 product = static_cast<unsigned __int128>(x) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = engine_();
        product = static_cast<unsigned __int128>(x) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <typename It>
  void shuffle(It first, It last) {
    const auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) {
      const std::uint64_t j = below(i);
      using std::swap;
      swap(first[i - 1], first[j]);
    }
  }

 private:
  Seed seed_;
  std::mt19937_64 engine_;
};

}  // namespace minbucket
