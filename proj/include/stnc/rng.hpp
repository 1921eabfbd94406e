#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace stnc {

// Counter-based random stream. Output i is a stateless hash of (key, i), so
// streams can be split hierarchically (child per trial, per channel draw, ...)
// and results do not depend on which worker evaluates which index. The mixer
// is the splitmix64 finalizer, which passes BigCrush as a counter generator.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : key_(mix(seed + kGolden)) {}

  // Independent substream; index may be any 64-bit value.
  RandomStream child(std::uint64_t index) const {
    return RandomStream(Raw{}, mix(key_ + (index + 1) * kGolden));
  }

  std::uint64_t next_u64() { return mix(key_ + ++counter_ * kGolden); }

  // Uniform on the open interval (0,1); never returns 0 or 1.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Exponential with the given mean, via inverse CDF.
  double next_exponential(double mean) { return -mean * std::log(next_uniform()); }

  // Circularly symmetric complex Gaussian with E[|z|^2] = variance.
  // Polar form: |z|^2 is exactly exponential(variance), phase uniform.
  std::complex<double> next_cgaussian(double variance) {
    const double r = std::sqrt(next_exponential(variance));
    const double phi = 6.283185307179586476925286766559 * next_uniform();
    return {r * std::cos(phi), r * std::sin(phi)};
  }

 private:
  struct Raw {};
  RandomStream(Raw, std::uint64_t key) : key_(key) {}

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace stnc
