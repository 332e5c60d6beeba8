#include "wittkit/factor.hpp"

#include <cmath>
#include <vector>

namespace wittkit {

SymmetricForm::SymmetricForm(const Matrix& q, const ToleranceContext& tol) : tol_(tol) {
  if (!q.is_square()) throw DimensionMismatch("SymmetricForm: Gram matrix must be square");
  if (q.rows() == 0) throw DimensionMismatch("SymmetricForm: dimension must be positive");
  const Matrix qt = q.transposed();
  ingest_asymmetry_ = (q - qt).max_abs() / std::max(q.max_abs(), 1.0);
  q_ = 0.5 * (q + qt);
  rank_ = wittkit::rank(q_, tol_);
}

SymmetricForm SymmetricForm::identity(std::size_t m, const ToleranceContext& tol) {
  return SymmetricForm(Matrix::identity(m), tol);
}

PivotChoice pivot_select(const Matrix& g, double scale, const ToleranceContext& tol) {
  if (!g.is_square()) throw DimensionMismatch("pivot_select: Gram matrix must be square");
  const std::size_t d = g.rows();

  double dmax = 0.0, omax = 0.0;
  std::size_t di = 0, oi = 0, oj = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const double mag = std::abs(g(i, i));
    if (mag > dmax) {
      dmax = mag;
      di = i;
    }
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const double mag = std::abs(g(i, j));
      if (mag > omax) {
        omax = mag;
        oi = i;
        oj = j;
      }
    }

  if (std::max(dmax, omax) <= tol.rank_rel_tol * scale) return ZeroFormPivot{};
  if (dmax >= omax) return DiagonalPivot{di};
  return SumPivot{oi, oj};
}

// Orthogonalization loop for bilinear forms. The working basis W spans the
// current subspace H; G = W^T q W is the restriction of the form to H. Each
// round picks a vector u with g(u, u) != 0, normalizes it by the principal
// square root, and passes to the hyperplane {w in H : q(v, w) = 0} by
// eliminating the pivot coordinate. Both W and G are updated incrementally.
Reduction symmetric_reduce(const SymmetricForm& q) {
  const std::size_t m = q.m();
  const ToleranceContext& tol = q.tol();
  const double scale = q.q().max_abs();

  Matrix w = Matrix::identity(m);             // m x d working basis
  Matrix g = q.q();                           // d x d restricted Gram matrix
  std::vector<Matrix> pivots;                 // normalized v_1 ... v_l
  pivots.reserve(m);

  while (g.rows() > 0) {
    const std::size_t d = g.rows();
    const PivotChoice choice = pivot_select(g, scale, tol);
    if (std::holds_alternative<ZeroFormPivot>(choice)) break;

    // Pivot vector u in H-coordinates and its form value.
    std::size_t p;  // coordinate eliminated below; q(v, w_p) != 0 by the pivot rule
    Matrix c(d, 1);
    Complex value;
    if (const auto* diag = std::get_if<DiagonalPivot>(&choice)) {
      p = diag->i;
      c(p, 0) = Complex(1.0, 0.0);
      value = g(p, p);
    } else {
      const auto& sum = std::get<SumPivot>(choice);
      p = sum.i;
      c(sum.i, 0) = Complex(1.0, 0.0);
      c(sum.j, 0) = Complex(1.0, 0.0);
      value = g(sum.i, sum.i) + g(sum.j, sum.j) + 2.0 * g(sum.i, sum.j);
    }

    const Complex root = std::sqrt(value);  // principal branch
    Matrix v = w * c;
    v *= Complex(1.0, 0.0) / root;
    pivots.push_back(v);

    // d_t = q(v, w_t) in current coordinates; d_p != 0 is guaranteed.
    Matrix dvec = g * c;
    dvec *= Complex(1.0, 0.0) / root;

    // New basis: w_t - (d_t / d_p) w_p for t != p, dropping w_p.
    const Complex dp = dvec(p, 0);
    Matrix w_next(m, d - 1);
    Matrix ratios(d, 1);
    {
      std::size_t out = 0;
      for (std::size_t t = 0; t < d; ++t) {
        if (t == p) continue;
        const Complex r = dvec(t, 0) / dp;
        ratios(t, 0) = r;
        for (std::size_t i = 0; i < m; ++i) w_next(i, out) = w(i, t) - r * w(i, p);
        ++out;
      }
    }

    // Gram update: g'(s,t) = g(s,t) - r_s g(p,t) - r_t g(s,p) + r_s r_t g(p,p).
    Matrix g_next(d - 1, d - 1);
    {
      std::size_t os = 0;
      for (std::size_t s = 0; s < d; ++s) {
        if (s == p) continue;
        std::size_t ot = 0;
        const Complex rs = ratios(s, 0);
        for (std::size_t t = 0; t < d; ++t) {
          if (t == p) continue;
          const Complex rt = ratios(t, 0);
          g_next(os, ot) = g(s, t) - rs * g(p, t) - rt * g(s, p) + rs * rt * g(p, p);
          ++ot;
        }
        ++os;
      }
    }

    w = std::move(w_next);
    g = std::move(g_next);
  }

  const std::size_t l = pivots.size();
  Reduction red;
  red.l = l;
  red.a = Matrix(m, m);
  for (std::size_t j = 0; j < l; ++j) red.a.set_block(0, j, pivots[j]);
  if (w.cols() > 0) red.a.set_block(0, l, w);

  // Certify the congruence and the invertibility of the basis.
  Matrix target(m, m);
  for (std::size_t i = 0; i < l; ++i) target(i, i) = Complex(1.0, 0.0);
  const double residual = (red.a.transposed() * q.q() * red.a - target).max_abs();
  const double bound = tol.residual_rel_tol * std::max(scale, 1.0) * static_cast<double>(m);
  if (residual > bound)
    throw CertificationFailure("symmetric_reduce: congruence residual " +
                               std::to_string(residual) + " above bound " +
                               std::to_string(bound));
  if (rank(red.a, tol) != m)
    throw CertificationFailure("symmetric_reduce: basis matrix is not invertible");
  return red;
}

TransposeFactor transpose_factor(const SymmetricForm& q) {
  const std::size_t m = q.m();
  const Reduction red = symmetric_reduce(q);

  Matrix p = inverse(red.a, q.tol());
  // diag(I_l, 0) a^-1: zero out the rows past the rank.
  for (std::size_t i = red.l; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) p(i, j) = Complex(0.0, 0.0);

  const double residual = (p.transposed() * p - q.q()).frobenius_norm();
  const double bound = q.tol().residual_rel_tol * std::max(q.q().frobenius_norm(), 1.0) *
                       static_cast<double>(m);
  if (residual > bound)
    throw CertificationFailure("transpose_factor: P^T P residual " + std::to_string(residual) +
                               " above bound " + std::to_string(bound));
  return TransposeFactor{std::move(p), red.l};
}

Matrix cayley_orthogonal(const Matrix& s, const SymmetricForm& q) {
  if (s.rows() != q.m()) throw DimensionMismatch("cayley_orthogonal: dimensions disagree");
  if (!q.non_degenerate())
    throw DegenerateForm("cayley_orthogonal: form must be non-degenerate");
  const Matrix a = cayley_orthogonal(s, q.tol());
  const TransposeFactor f = transpose_factor(q);
  // p^-1 a p preserves q: (p^-1 a p)^T q (p^-1 a p) = p^T a^T a p = q.
  return solve(f.p, a * f.p, q.tol());
}

}  // namespace wittkit
