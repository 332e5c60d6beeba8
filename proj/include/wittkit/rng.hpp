#pragma once

#include <cstdint>
#include <random>

#include "wittkit/matrix.hpp"
#include "wittkit/tolerance.hpp"

namespace wittkit {

// Seeded 64-bit generator with a fixed uint64 -> double mapping, so the same
// seed reproduces the same stream on every platform. The standard library
// distributions are implementation-defined and are deliberately not used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [lo, hi), 53-bit resolution.
  double uniform(double lo = 0.0, double hi = 1.0) {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  std::size_t index(std::size_t n);  // uniform in {0, ..., n-1}

  // Entry with real and imaginary parts uniform on [-1, 1).
  Complex entry();

  Matrix matrix(std::size_t rows, std::size_t cols);
  Matrix symmetric(std::size_t n);
  Matrix skew_symmetric(std::size_t n);

  // Invertible n x n with all full-pivot elimination pivots above tol; keeps
  // resampling (deterministically) until that holds.
  Matrix invertible(std::size_t n, const ToleranceContext& tol = {});

 private:
  std::mt19937_64 gen_;
};

}  // namespace wittkit
