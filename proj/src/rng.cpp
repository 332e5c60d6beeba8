#include "wittkit/rng.hpp"

#include "wittkit/linalg.hpp"

namespace wittkit {

std::size_t Rng::index(std::size_t n) {
  // Rejection sampling keeps the distribution exactly uniform.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x > limit);
  return static_cast<std::size_t>(x % n);
}

Complex Rng::entry() {
  const double re = uniform(-1.0, 1.0);
  const double im = uniform(-1.0, 1.0);
  return Complex(re, im);
}

Matrix Rng::matrix(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry();
  return m;
}

Matrix Rng::symmetric(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Complex x = entry();
      m(i, j) = x;
      m(j, i) = x;
    }
  return m;
}

Matrix Rng::skew_symmetric(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex x = entry();
      m(i, j) = x;
      m(j, i) = -x;
    }
  return m;
}

Matrix Rng::invertible(std::size_t n, const ToleranceContext& tol) {
  for (;;) {
    Matrix candidate = matrix(n, n);
    if (rank(candidate, tol) == n) return candidate;
  }
}

}  // namespace wittkit
