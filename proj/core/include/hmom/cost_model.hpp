#pragma once

#include <stdexcept>

namespace hmom {

/// Inputs of the total-solve-time model: preconditioner set-up time,
/// average iterations per right-hand side, number of right-hand sides,
/// preconditioner solve time and matrix-vector product time per iteration.
struct CostModelInput {
  double setupSeconds = 0.0;       // T_pc
  double iterations = 0.0;         // N_itr
  double rightHandSides = 0.0;     // N_rhs
  double precondSolveSeconds = 0.0;  // T_pcsol
  double matvecSeconds = 0.0;        // T_mmv
};

inline double cost_model(const CostModelInput& in) {
  if (in.setupSeconds < 0 || in.iterations < 0 || in.rightHandSides < 0 ||
      in.precondSolveSeconds < 0 || in.matvecSeconds < 0)
    throw std::invalid_argument("cost model inputs must be non-negative");
  return in.setupSeconds +
         in.iterations * in.rightHandSides *
             (in.precondSolveSeconds + in.matvecSeconds);
}

}  // namespace hmom
