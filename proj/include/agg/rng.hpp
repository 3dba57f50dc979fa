#pragma once

#include <cstdint>
#include <random>

namespace agg {

/// Seeded, portable noise source.  Draws come from std::mt19937_64 (whose
/// output sequence is fixed by the standard); the uniform mapping uses the
/// top 53 bits, so streams reproduce bit-for-bit across platforms.  Field
/// noise is always sampled in row-major grid order.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform in [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

  private:
    std::mt19937_64 eng_;
};

} // namespace agg
