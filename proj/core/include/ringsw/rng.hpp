#pragma once

#include "ringsw/units.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace ringsw {

// splitmix64 finalizer; used to derive independent substream seeds so that
// execution order of sweep rows never changes drawn values.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_key(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> keys) {
  std::uint64_t s = mix64(master);
  for (auto k : keys) s = mix64(s ^ k);
  return s;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return uni_(gen_); }
  double gaussian(double sigma = 1.0) { return sigma * norm_(gen_); }
  std::complex<double> cgaussian(double sigma_per_dim) {
    const double re = norm_(gen_);
    const double im = norm_(gen_);
    return {sigma_per_dim * re, sigma_per_dim * im};
  }
  bool bit() { return (gen_() & 1u) != 0; }
  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> norm_{0.0, 1.0};
  std::uniform_real_distribution<double> uni_{0.0, 1.0};
};

}  // namespace ringsw
