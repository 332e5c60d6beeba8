#pragma once

#include "wittkit/errors.hpp"

namespace wittkit {

// Numerical context shared by every rank decision and residual certificate.
//
// rank_rel_tol scales with the largest entry magnitude of the matrix whose
// rank is being decided; residual_rel_tol scales with the norm of the object
// an identity is certified against.
struct ToleranceContext {
  double rank_rel_tol = 1e-10;
  double residual_rel_tol = 1e-8;

  ToleranceContext() = default;

  ToleranceContext(double rank_tol, double residual_tol)
      : rank_rel_tol(rank_tol), residual_rel_tol(residual_tol) {
    if (!(rank_rel_tol >= 0.0 && rank_rel_tol < 1.0))
      throw InvalidArgument("rank_rel_tol must lie in [0, 1)");
    if (!(residual_rel_tol >= 0.0 && residual_rel_tol < 1.0))
      throw InvalidArgument("residual_rel_tol must lie in [0, 1)");
  }
};

}  // namespace wittkit
