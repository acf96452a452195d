#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace segpoint {

// splitmix64 step; used to derive independent substream seeds from a master
// seed. Algorithm: Steele, Lea & Flood (2014).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic substream seed: master seed combined with one or more tags.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) {
  std::uint64_t s = master ^ (0x2545f4914f6cdd1dULL * (tag + 1));
  return splitmix64(s);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag1,
                                 std::uint64_t tag2) {
  return derive_seed(derive_seed(master, tag1), tag2);
}

// Seeded random stream: mt19937_64 with an explicit 53-bit uniform mapping
// and inverse-CDF samplers, so results are reproducible across platforms for
// a given seed.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1): rejects exact zeros so log(1-u) is always finite.
  double uniform_open() {
    double u;
    do {
      u = uniform();
    } while (u == 0.0);
    return u;
  }

  // Exponential with the given mean, via x = -mean * ln(1 - u).
  double exponential(double mean) {
    if (!(mean > 0.0)) throw std::invalid_argument("exponential mean must be > 0");
    return -mean * std::log1p(-uniform());
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace segpoint
