#include "wittkit/isotropic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wittkit/rng.hpp"

namespace wittkit {

Plane::Plane(const Matrix& basis, const ToleranceContext& tol) : basis_(basis) {
  const std::size_t m = basis_.rows(), k = basis_.cols();
  if (k < 1 || k > m) throw DimensionMismatch("Plane: need 1 <= k <= m");
  if (rank(basis_, tol) != k) throw RankDeficient("Plane: basis does not have full column rank");
  for (std::size_t j = 0; j < k; ++j) {
    double norm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) norm2 += std::norm(basis_(i, j));
    const double norm = std::sqrt(norm2);
    for (std::size_t i = 0; i < m; ++i) basis_(i, j) /= norm;
  }
}

RowPermutation::RowPermutation(std::size_t m) : perm_(m) {
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
}

void RowPermutation::apply_swap(std::size_t i, std::size_t j) {
  if (i >= size() || j >= size()) throw IndexOutOfRange("RowPermutation: swap out of range");
  if (i == j) return;
  std::swap(perm_[i], perm_[j]);
  swaps_.emplace_back(i, j);
}

Matrix RowPermutation::apply(const Matrix& b) const {
  if (b.rows() != size()) throw DimensionMismatch("RowPermutation: row count mismatch");
  Matrix out(b.rows(), b.cols());
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = b(perm_[r], c);
  return out;
}

Matrix RowPermutation::apply_inverse(const Matrix& b) const {
  if (b.rows() != size()) throw DimensionMismatch("RowPermutation: row count mismatch");
  Matrix out(b.rows(), b.cols());
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(perm_[r], c) = b(r, c);
  return out;
}

Matrix RowPermutation::matrix() const {
  Matrix p(size(), size());
  for (std::size_t r = 0; r < size(); ++r) p(r, perm_[r]) = Complex(1.0, 0.0);
  return p;
}

NormalizedPlane::NormalizedPlane(RowPermutation perm, Matrix m1, Matrix m2,
                                 const ToleranceContext& tol)
    : perm_(std::move(perm)), m1_(std::move(m1)), m2_(std::move(m2)) {
  const std::size_t k = m1_.rows();
  const std::size_t m = perm_.size();
  if (m1_.cols() != k || k == 0) throw DimensionMismatch("NormalizedPlane: m1 must be k x k");
  if (m2_.cols() != k || m2_.rows() != m - 2 * k || m < 2 * k + 1)
    throw DimensionMismatch("NormalizedPlane: m2 must be (m-2k) x k with k < m/2");
  if (rank(m1_, tol) != k) throw RankDeficient("NormalizedPlane: m1 is singular");

  const Matrix iso = Matrix::identity(k) + m1_.transposed() * m1_ + m2_.transposed() * m2_;
  isotropy_defect_ = iso.max_abs();
  if (isotropy_defect_ > tol.residual_rel_tol)
    throw NotIsotropic("NormalizedPlane: isotropy identity defect " +
                       std::to_string(isotropy_defect_) + " above tolerance");
  if (rank(vstack(m1_, m2_), tol) != k)
    throw RankDeficient("NormalizedPlane: stacked block [m1; m2] is rank deficient");
}

Matrix NormalizedPlane::stacked() const {
  return vstack(vstack(Matrix::identity(k()), m1_), m2_);
}

Matrix NormalizedPlane::reassembled_basis() const { return perm_.apply_inverse(stacked()); }

double isotropy_residual(const SymmetricForm& q, const Plane& p) {
  if (q.m() != p.m()) throw DimensionMismatch("isotropy_residual: dimensions disagree");
  const Matrix& b = p.basis();
  const double defect = (b.transposed() * q.q() * b).max_abs();
  return defect / std::max(q.q().max_abs(), 1.0);
}

std::size_t max_isotropic_dim(std::size_t m) { return m / 2; }

Plane sample_isotropic(const SymmetricForm& q, std::size_t k, std::uint64_t seed) {
  const std::size_t m = q.m();
  if (k < 1 || k > max_isotropic_dim(m))
    throw DimensionBound("sample_isotropic: isotropic planes require 1 <= k <= m/2, got k = " +
                         std::to_string(k) + " with m = " + std::to_string(m));
  if (!q.non_degenerate())
    throw DegenerateForm("sample_isotropic: form has rank " + std::to_string(q.rank()) +
                         " < m = " + std::to_string(m));
  const ToleranceContext& tol = q.tol();

  // Standard isotropic frame: columns (e_{2j-1} + i e_{2j}) / sqrt(2).
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Matrix frame(m, k);
  for (std::size_t j = 0; j < k; ++j) {
    frame(2 * j, j) = Complex(inv_sqrt2, 0.0);
    frame(2 * j + 1, j) = Complex(0.0, inv_sqrt2);
  }

  Rng rng(seed);
  Matrix rotation;
  for (;;) {
    const Matrix s = rng.skew_symmetric(m);
    try {
      rotation = cayley_orthogonal(s, tol);
      break;
    } catch (const SingularMatrix&) {
      // I + s singular: resample.
    }
  }
  const Matrix mix = rng.invertible(k, tol);

  Matrix basis_id = rotation * frame * mix;
  Matrix basis = basis_id;
  if ((q.q() - Matrix::identity(m)).max_abs() != 0.0) {
    const TransposeFactor f = transpose_factor(q);
    basis = solve(f.p, basis_id, tol);  // pull back through p^-1
  }

  Plane plane(basis, tol);
  const double residual = isotropy_residual(q, plane);
  if (residual > 1e-10)
    throw CertificationFailure("sample_isotropic: isotropy residual " + std::to_string(residual) +
                               " above 1e-10");
  return plane;
}

namespace {

// Greedy full-pivot row selection: repeatedly takes the largest remaining
// entry, keeps its row, and eliminates its column from the rows not yet
// selected. Returns the selected row indices in selection order, or fewer
// than `count` if the pivots fall below `threshold`.
std::vector<std::size_t> greedy_pivot_rows(Matrix work, std::size_t count, double threshold) {
  const std::size_t rows = work.rows(), cols = work.cols();
  std::vector<bool> row_used(rows, false), col_used(cols, false);
  std::vector<std::size_t> selected;
  selected.reserve(count);

  for (std::size_t step = 0; step < count; ++step) {
    std::size_t pi = 0, pj = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (row_used[i]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (col_used[j]) continue;
        const double mag = std::abs(work(i, j));
        if (mag > best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    }
    if (!(best > threshold)) break;

    row_used[pi] = true;
    col_used[pj] = true;
    selected.push_back(pi);
    const Complex pivot = work(pi, pj);
    for (std::size_t i = 0; i < rows; ++i) {
      if (row_used[i]) continue;
      const Complex factor = work(i, pj) / pivot;
      if (factor == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (col_used[j]) continue;
        work(i, j) -= factor * work(pi, j);
      }
    }
  }
  return selected;
}

// Moves the rows listed in `wanted` to positions dest, dest+1, ... by swaps.
void realize_selection(RowPermutation& perm, Matrix& b, std::vector<std::size_t> wanted,
                       std::size_t dest) {
  for (std::size_t s = 0; s < wanted.size(); ++s) {
    const std::size_t target = dest + s;
    const std::size_t from = wanted[s];
    if (from != target) {
      perm.apply_swap(target, from);
      b.swap_rows(target, from);
      // Any pending selection pointing at `target` now lives at `from`.
      for (std::size_t t = s + 1; t < wanted.size(); ++t)
        if (wanted[t] == target) wanted[t] = from;
    }
  }
}

// Right-multiplies the permuted basis by the inverse of its top k x k block.
Matrix shape_to_identity_top(const Matrix& permuted, std::size_t k, const ToleranceContext& tol) {
  const Matrix top = permuted.block(0, 0, k, k);
  try {
    return solve(top.transposed(), permuted.transposed(), tol).transposed();
  } catch (const SingularMatrix&) {
    throw NotNormalizable("normalize_plane: top block is singular under the given permutation");
  }
}

void check_isotropic_and_shape(const Plane& p, const ToleranceContext& tol) {
  const double residual = isotropy_residual(SymmetricForm::identity(p.m(), tol), p);
  if (residual > tol.residual_rel_tol)
    throw NotIsotropic("normalize_plane: plane is not isotropic for the identity form");
  if (2 * p.k() >= p.m())
    throw NotNormalizable("normalize_plane: normal form requires k < m/2; k = m/2 planes are "
                          "handled by the frame transporter");
}

}  // namespace

NormalizedPlane normalize_plane(const Plane& p, const ToleranceContext& tol) {
  check_isotropic_and_shape(p, tol);
  const std::size_t m = p.m(), k = p.k();

  // Identity-block rows by greedy volume over the whole basis.
  const Matrix& b = p.basis();
  const double top_threshold = tol.rank_rel_tol * std::max(b.max_abs(), 1.0);
  const std::vector<std::size_t> top_rows = greedy_pivot_rows(b, k, top_threshold);
  if (top_rows.size() < k) throw RankDeficient("normalize_plane: basis lost full column rank");

  RowPermutation perm(m);
  Matrix permuted = b;
  realize_selection(perm, permuted, top_rows, 0);
  Matrix shaped = shape_to_identity_top(permuted, k, tol);

  // Among the remaining rows, pick k rows for m1 by greedy volume.
  const Matrix rest = shaped.block(k, 0, m - k, k);
  const double threshold = tol.rank_rel_tol * std::max(rest.max_abs(), 1.0);
  std::vector<std::size_t> chosen = greedy_pivot_rows(rest, k, threshold);
  if (chosen.size() < k)
    throw NotNormalizable(
        "normalize_plane: no permutation yields an invertible m1 within the rank threshold");

  for (auto& r : chosen) r += k;
  realize_selection(perm, shaped, chosen, k);

  return NormalizedPlane(std::move(perm), shaped.block(k, 0, k, k),
                         shaped.block(2 * k, 0, m - 2 * k, k), tol);
}

NormalizedPlane normalize_plane(const Plane& p, const RowPermutation& perm,
                                const ToleranceContext& tol) {
  if (perm.size() != p.m()) throw DimensionMismatch("normalize_plane: permutation size mismatch");
  check_isotropic_and_shape(p, tol);
  const std::size_t m = p.m(), k = p.k();

  // The fixed permutation determines every block; no further row choice.
  const Matrix shaped = shape_to_identity_top(perm.apply(p.basis()), k, tol);
  try {
    return NormalizedPlane(perm, shaped.block(k, 0, k, k), shaped.block(2 * k, 0, m - 2 * k, k),
                           tol);
  } catch (const RankDeficient& e) {
    throw NotNormalizable(std::string("normalize_plane: ") + e.what());
  }
}

}  // namespace wittkit
