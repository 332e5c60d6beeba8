#pragma once

#include <variant>

#include "wittkit/linalg.hpp"
#include "wittkit/matrix.hpp"
#include "wittkit/tolerance.hpp"

namespace wittkit {

// A complex symmetric bilinear form, identified with its m x m Gram matrix.
// The matrix is symmetrized on ingestion ((q + q^T)/2); the relative
// asymmetry of the original input is kept so callers can surface a warning.
class SymmetricForm {
 public:
  explicit SymmetricForm(const Matrix& q, const ToleranceContext& tol = {});

  const Matrix& q() const { return q_; }
  std::size_t m() const { return q_.rows(); }
  std::size_t rank() const { return rank_; }
  bool non_degenerate() const { return rank_ == m(); }
  double ingest_asymmetry() const { return ingest_asymmetry_; }
  const ToleranceContext& tol() const { return tol_; }

  static SymmetricForm identity(std::size_t m, const ToleranceContext& tol = {});

 private:
  Matrix q_;
  std::size_t rank_;
  double ingest_asymmetry_;
  ToleranceContext tol_;
};

// Outcome of one pivot selection on a restricted Gram matrix g:
//   Diagonal{i}  use basis vector w_i,           value g(i,i)
//   Sum{i, j}    use w_i + w_j (i < j),          value g(i,i) + g(j,j) + 2 g(i,j)
//   ZeroForm     the whole restriction is below threshold; reduction stops.
struct DiagonalPivot {
  std::size_t i;
};
struct SumPivot {
  std::size_t i, j;
};
struct ZeroFormPivot {};
using PivotChoice = std::variant<DiagonalPivot, SumPivot, ZeroFormPivot>;

// Deterministic pivot rule. dmax = max_i |g(i,i)|, omax = max_{i<j} |g(i,j)|.
// Returns ZeroForm when max(dmax, omax) <= rank_rel_tol * scale; otherwise
// Diagonal at the diagonal argmax when dmax >= omax, else Sum at the
// off-diagonal argmax. In the Sum case the value g(i,i) + g(j,j) + 2 g(i,j)
// cannot vanish because the off-diagonal entry strictly dominates the
// diagonal.
PivotChoice pivot_select(const Matrix& g, double scale, const ToleranceContext& tol = {});

// Invertible change of basis a with a^T q a = diag(I_l, 0), l = rank of the
// form. The first l columns are the normalized pivot vectors; the remaining
// columns span the terminal subspace on which the form is below threshold.
struct Reduction {
  Matrix a;
  std::size_t l = 0;
};

Reduction symmetric_reduce(const SymmetricForm& q);

// p with p^T p = q and rank(p) = rank(q); p = diag(I_l, 0) a^-1 for the
// reduction basis a. Invertible exactly when q is non-degenerate.
struct TransposeFactor {
  Matrix p;
  std::size_t l = 0;
};

TransposeFactor transpose_factor(const SymmetricForm& q);

// Element of the orthogonal group of q obtained by conjugating a Cayley
// transform into q-coordinates through q = p^T p. Requires q non-degenerate.
Matrix cayley_orthogonal(const Matrix& s, const SymmetricForm& q);

}  // namespace wittkit
