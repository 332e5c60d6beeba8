#pragma once

#include "wittkit/matrix.hpp"
#include "wittkit/tolerance.hpp"

namespace wittkit {

// Number of pivots in full-pivot elimination whose magnitude strictly exceeds
// rank_rel_tol * max_abs(a). The threshold is fixed from the original matrix,
// not rescaled as elimination proceeds.
std::size_t rank(const Matrix& a, const ToleranceContext& tol = {});

// Basis of the right kernel of a, as an n x (n - rank) matrix. Columns are
// produced in a deterministic order (one per free column of the full-pivot
// elimination).
Matrix kernel_basis(const Matrix& a, const ToleranceContext& tol = {});

// Solves a x = b by partial-pivot elimination. Throws SingularMatrix when a
// pivot falls below the rank threshold of a.
Matrix solve(const Matrix& a, const Matrix& b, const ToleranceContext& tol = {});

Matrix inverse(const Matrix& a, const ToleranceContext& tol = {});

// Minimum-Euclidean-norm solution of the full-row-rank system a x = b via
// conjugate-transpose normal equations. Throws RankDeficient when the row
// rank falls short of rows(a).
Matrix min_norm_solve(const Matrix& a, const Matrix& b, const ToleranceContext& tol = {});

// Frobenius distance between the unitary orthogonal projectors onto the two
// column spans. Projectors are built with the conjugate transpose: span
// comparison is metric plumbing, not bilinear-form algebra. Zero iff the
// spans agree; invariant under right multiplication by invertible matrices.
double span_distance(const Matrix& b1, const Matrix& b2, const ToleranceContext& tol = {});

// Cayley transform (I - s)(I + s)^-1 of a skew-symmetric s; the result
// satisfies A^T A = I. Throws SingularMatrix when I + s is singular, in which
// case callers resample s.
Matrix cayley_orthogonal(const Matrix& s, const ToleranceContext& tol = {});

}  // namespace wittkit
