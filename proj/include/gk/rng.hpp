#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace gk {

/// Portable random stream, algorithm id "gk-rng/1".
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Every derived variate is computed here from raw engine words
/// (never through std:: distributions, whose algorithms are unspecified), so
/// a seed reproduces the same data on any conforming platform:
///   uniform01()   = (word >> 11) * 2^-53
///   bernoulli(p)  = uniform01() < p
///   below(k)      = floor(uniform01() * k), clamped to k-1
///   poisson(mean) = inversion by sequential search on one uniform01()
class Rng {
 public:
  static constexpr const char* kAlgorithm = "gk-rng/1 (mt19937_64)";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_word() { return engine_(); }

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  std::uint64_t below(std::uint64_t k) {
    auto v = static_cast<std::uint64_t>(uniform01() * static_cast<double>(k));
    return v < k ? v : k - 1;
  }

  /// Requires 0 <= mean <= 700 (e^-mean must not underflow).
  std::uint64_t poisson(double mean) {
    double u = uniform01();
    double p = std::exp(-mean);
    double cdf = p;
    std::uint64_t k = 0;
    while (u > cdf) {
      ++k;
      p *= mean / static_cast<double>(k);
      cdf += p;
      if (p == 0.0 && static_cast<double>(k) > mean) break;
    }
    return k;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gk
