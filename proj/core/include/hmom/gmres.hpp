#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hmom/types.hpp"

namespace hmom {

using MatVec = std::function<CVec(const CVec&)>;

enum class PrecondSide { left, right };

struct GmresConfig {
  double tol = 1e-6;   // relative residual target
  int restart = 100;
  int maxIters = 5000;
  PrecondSide side = PrecondSide::left;
};

struct GmresReport {
  CVec solution;
  int iterations = 0;
  std::vector<double> residualHistory;  // one entry per inner iteration
  bool converged = false;
  double finalResidual = 0.0;  // monitored (preconditioned for left)
  double trueResidual = 0.0;   // |Zx - b| / |b| of the returned solution
  int restartsUsed = 0;
  int restartLength = 0;
  std::string breakdown;  // non-empty when Arnoldi broke down abnormally
};

/// Restarted GMRES with modified Gram-Schmidt (one reorthogonalization
/// pass on detected loss of orthogonality). Left mode solves
/// P^-1 Z x = P^-1 b monitoring the preconditioned residual; right mode
/// solves Z P^-1 xt = b and returns x = P^-1 xt.
GmresReport gmres(const MatVec& op, const MatVec& precond, const CVec& b,
                  const GmresConfig& config);

inline GmresReport gmres(const MatVec& op, const CVec& b,
                         const GmresConfig& config) {
  return gmres(op, MatVec{}, b, config);
}

}  // namespace hmom
