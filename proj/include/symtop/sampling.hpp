#pragma once

#include <cstdint>
#include <random>

namespace symtop {

// Uniform sampler over mt19937_64 with an explicit bit-to-double mapping,
// so that a given seed produces the same stream on every standard library.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

  // [0, 1)
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * unit(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace symtop
