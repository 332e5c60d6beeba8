#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wittkit/factor.hpp"
#include "wittkit/matrix.hpp"

namespace wittkit {

// A k-dimensional subspace of C^m held as an m x k basis of full column
// rank. Columns are normalized to unit Euclidean length on construction;
// only the span carries meaning.
class Plane {
 public:
  Plane(const Matrix& basis, const ToleranceContext& tol = {});

  const Matrix& basis() const { return basis_; }
  std::size_t m() const { return basis_.rows(); }
  std::size_t k() const { return basis_.cols(); }

 private:
  Matrix basis_;
};

// Row permutation built as an explicit product of coordinate swaps. Each
// swap is an element of the orthogonal group of the identity form, so
// applying the permutation never leaves that group.
class RowPermutation {
 public:
  explicit RowPermutation(std::size_t m);

  std::size_t size() const { return perm_.size(); }

  // Swap positions i and j (recorded as one generator).
  void apply_swap(std::size_t i, std::size_t j);

  // Row r of the result is row position(r) of b.
  Matrix apply(const Matrix& b) const;
  Matrix apply_inverse(const Matrix& b) const;

  std::size_t position(std::size_t r) const { return perm_[r]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& swaps() const { return swaps_; }

  Matrix matrix() const;  // the product of the recorded swap generators

  bool operator==(const RowPermutation& other) const { return perm_ == other.perm_; }
  bool operator!=(const RowPermutation& other) const { return !(*this == other); }

 private:
  std::vector<std::size_t> perm_;
  std::vector<std::pair<std::size_t, std::size_t>> swaps_;
};

// Normal form of an isotropic plane for the identity form: a row permutation
// under which the basis becomes [I_k; m1; m2] with m1 invertible. Requires
// k < m/2, so the (m-2k)-row block exists. Construction certifies the
// isotropy identity I_k + m1^T m1 + m2^T m2 = 0 and the rank of the stacked
// block [m1; m2].
class NormalizedPlane {
 public:
  NormalizedPlane(RowPermutation perm, Matrix m1, Matrix m2, const ToleranceContext& tol = {});

  std::size_t m() const { return perm_.size(); }
  std::size_t k() const { return m1_.rows(); }

  const RowPermutation& row_permutation() const { return perm_; }
  const Matrix& m1() const { return m1_; }
  const Matrix& m2() const { return m2_; }

  Matrix stacked() const;            // [I_k; m1; m2] in permuted coordinates
  Matrix reassembled_basis() const;  // inverse permutation applied; spans the original plane
  double isotropy_defect() const { return isotropy_defect_; }

 private:
  RowPermutation perm_;
  Matrix m1_;
  Matrix m2_;
  double isotropy_defect_;
};

// ||basis^T q basis||_max / max(||q||_max, 1). The plane is isotropic when
// this does not exceed residual_rel_tol.
double isotropy_residual(const SymmetricForm& q, const Plane& p);

// floor(m/2): the largest dimension an isotropic plane of a non-degenerate
// form on C^m can have.
std::size_t max_isotropic_dim(std::size_t m);

// Seeded isotropic k-plane of a non-degenerate form. Built from the standard
// isotropic frame in identity-form coordinates, randomized by a Cayley group
// element and a right basis mix, then pulled back through q = p^T p. The
// output certifies isotropy_residual <= 1e-10.
Plane sample_isotropic(const SymmetricForm& q, std::size_t k, std::uint64_t seed);

// Normal form [I_k; m1; m2] with greedy row selection: the identity block by
// full-pivot elimination on the basis, then m1 from the remaining rows by
// the same greedy volume rule. All row moves are swap generators. Throws
// NotNormalizable when no invertible m1 emerges within the rank threshold or
// when k >= m/2 (those planes belong to the frame transporter).
NormalizedPlane normalize_plane(const Plane& p, const ToleranceContext& tol = {});

// Same normal form but under a caller-fixed permutation (the generic
// transporter normalizes both planes with the permutation chosen for the
// first one). Throws NotNormalizable when the top block is singular under
// that permutation.
NormalizedPlane normalize_plane(const Plane& p, const RowPermutation& perm,
                                const ToleranceContext& tol = {});

}  // namespace wittkit
