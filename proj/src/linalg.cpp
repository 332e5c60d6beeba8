#include "wittkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace wittkit {

namespace {

struct Elimination {
  Matrix u;                           // eliminated matrix, pivots on the leading diagonal
  std::vector<std::size_t> col_perm;  // col_perm[j] = original column at position j
  std::size_t rank = 0;
};

// Full-pivot Gaussian elimination with row and column exchanges. The pivot
// threshold is rank_rel_tol * max_abs of the input, fixed up front.
Elimination full_pivot_eliminate(const Matrix& a, const ToleranceContext& tol) {
  Elimination e;
  e.u = a;
  e.col_perm.resize(a.cols());
  std::iota(e.col_perm.begin(), e.col_perm.end(), std::size_t{0});

  const double threshold = tol.rank_rel_tol * a.max_abs();
  const std::size_t n = std::min(a.rows(), a.cols());

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pi = step, pj = step;
    double best = 0.0;
    for (std::size_t i = step; i < a.rows(); ++i)
      for (std::size_t j = step; j < a.cols(); ++j) {
        const double mag = std::abs(e.u(i, j));
        if (mag > best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (!(best > threshold)) break;

    e.u.swap_rows(step, pi);
    e.u.swap_cols(step, pj);
    std::swap(e.col_perm[step], e.col_perm[pj]);

    const Complex pivot = e.u(step, step);
    for (std::size_t i = step + 1; i < a.rows(); ++i) {
      const Complex factor = e.u(i, step) / pivot;
      if (factor == Complex(0.0, 0.0)) continue;
      e.u(i, step) = Complex(0.0, 0.0);
      for (std::size_t j = step + 1; j < a.cols(); ++j) e.u(i, j) -= factor * e.u(step, j);
    }
    ++e.rank;
  }
  return e;
}

}  // namespace

std::size_t rank(const Matrix& a, const ToleranceContext& tol) {
  if (a.is_empty()) return 0;
  return full_pivot_eliminate(a, tol).rank;
}

Matrix kernel_basis(const Matrix& a, const ToleranceContext& tol) {
  const std::size_t n = a.cols();
  const Elimination e = full_pivot_eliminate(a, tol);
  const std::size_t r = e.rank;
  Matrix basis(n, n - r);

  // One kernel vector per free column: set that coordinate to 1 and back
  // substitute through the r x r pivot block.
  for (std::size_t f = 0; f < n - r; ++f) {
    std::vector<Complex> x(n, Complex(0.0, 0.0));
    x[r + f] = Complex(1.0, 0.0);
    for (std::size_t ii = r; ii-- > 0;) {
      Complex s = e.u(ii, r + f);
      for (std::size_t j = ii + 1; j < r; ++j) s += e.u(ii, j) * x[j];
      x[ii] = -s / e.u(ii, ii);
    }
    for (std::size_t j = 0; j < n; ++j) basis(e.col_perm[j], f) = x[j];
  }
  return basis;
}

Matrix solve(const Matrix& a, const Matrix& b, const ToleranceContext& tol) {
  if (!a.is_square()) throw DimensionMismatch("solve: matrix must be square");
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: right-hand side has wrong row count");
  const std::size_t n = a.rows();
  const double threshold = tol.rank_rel_tol * a.max_abs();

  Matrix u = a;
  Matrix rhs = b;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pi = step;
    double best = 0.0;
    for (std::size_t i = step; i < n; ++i) {
      const double mag = std::abs(u(i, step));
      if (mag > best) {
        best = mag;
        pi = i;
      }
    }
    if (!(best > threshold))
      throw SingularMatrix("solve: pivot below rank threshold at column " + std::to_string(step));
    u.swap_rows(step, pi);
    rhs.swap_rows(step, pi);

    const Complex pivot = u(step, step);
    for (std::size_t i = step + 1; i < n; ++i) {
      const Complex factor = u(i, step) / pivot;
      if (factor == Complex(0.0, 0.0)) continue;
      u(i, step) = Complex(0.0, 0.0);
      for (std::size_t j = step + 1; j < n; ++j) u(i, j) -= factor * u(step, j);
      for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) -= factor * rhs(step, j);
    }
  }

  Matrix x(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      Complex s = rhs(ii, c);
      for (std::size_t j = ii + 1; j < n; ++j) s -= u(ii, j) * x(j, c);
      x(ii, c) = s / u(ii, ii);
    }
  }
  return x;
}

Matrix inverse(const Matrix& a, const ToleranceContext& tol) {
  return solve(a, Matrix::identity(a.rows()), tol);
}

Matrix min_norm_solve(const Matrix& a, const Matrix& b, const ToleranceContext& tol) {
  if (a.rows() > a.cols())
    throw RankDeficient("min_norm_solve: more rows than columns, row rank cannot be full");
  if (a.rows() != b.rows())
    throw DimensionMismatch("min_norm_solve: right-hand side has wrong row count");
  const Matrix ah = a.conj_transposed();
  const Matrix gram = a * ah;  // Hermitian, positive definite iff full row rank
  Matrix y;
  try {
    y = solve(gram, b, tol);
  } catch (const SingularMatrix&) {
    throw RankDeficient("min_norm_solve: row rank below rows(a)");
  }
  return ah * y;
}

namespace {

// Modified Gram-Schmidt with one reorthogonalization pass, conjugating inner
// product. Input must have full column rank.
Matrix orthonormalize(const Matrix& b, const ToleranceContext& tol) {
  const std::size_t m = b.rows(), k = b.cols();
  Matrix q = b;
  for (std::size_t j = 0; j < k; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t p = 0; p < j; ++p) {
        Complex proj(0.0, 0.0);
        for (std::size_t i = 0; i < m; ++i) proj += std::conj(q(i, p)) * q(i, j);
        for (std::size_t i = 0; i < m; ++i) q(i, j) -= proj * q(i, p);
      }
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) norm2 += std::norm(q(i, j));
    const double norm = std::sqrt(norm2);
    if (!(norm > tol.rank_rel_tol * std::max(b.max_abs(), 1.0)))
      throw RankDeficient("span basis is numerically rank deficient");
    for (std::size_t i = 0; i < m; ++i) q(i, j) /= norm;
  }
  return q;
}

}  // namespace

double span_distance(const Matrix& b1, const Matrix& b2, const ToleranceContext& tol) {
  if (b1.rows() != b2.rows())
    throw DimensionMismatch("span_distance: ambient dimensions differ");
  if (b1.cols() == 0 || b2.cols() == 0 || b1.cols() > b1.rows() || b2.cols() > b2.rows())
    throw RankDeficient("span_distance: bases must have 1 <= k <= m columns");
  const Matrix q1 = orthonormalize(b1, tol);
  const Matrix q2 = orthonormalize(b2, tol);
  const Matrix p1 = q1 * q1.conj_transposed();
  const Matrix p2 = q2 * q2.conj_transposed();
  return (p1 - p2).frobenius_norm();
}

Matrix cayley_orthogonal(const Matrix& s, const ToleranceContext& tol) {
  if (!s.is_square()) throw DimensionMismatch("cayley_orthogonal: matrix must be square");
  const double skew_defect = (s + s.transposed()).max_abs();
  if (skew_defect > tol.rank_rel_tol * std::max(s.max_abs(), 1.0))
    throw InvalidArgument("cayley_orthogonal: matrix is not skew-symmetric");
  const Matrix id = Matrix::identity(s.rows());
  // (I - s) and (I + s)^-1 commute, so either composition order is fine.
  const Matrix a = solve(id + s, id - s, tol);
  const double residual = (a.transposed() * a - id).frobenius_norm();
  if (residual > tol.residual_rel_tol)
    throw CertificationFailure("cayley_orthogonal: A^T A - I residual " +
                               std::to_string(residual) + " above tolerance");
  return a;
}

}  // namespace wittkit
