#pragma once

#include <vector>

#include "hmom/sparse_lu.hpp"
#include "hmom/types.hpp"

namespace hmom {

struct SpectrumReport {
  CVec eigenvalues;
  double conditionEstimate = 0.0;  // max|lambda| / min|lambda|

  /// Fraction of eigenvalues with |lambda - 1| <= radius.
  double clusterFraction(double radius) const;
};

/// Eigenvalues of Z, or of P^-1 Z when a factorization is given (formed by
/// applying it to Z's columns). Dense path; refuses N above denseCap.
SpectrumReport dense_spectrum(const CMat& Z, const SparseLu* precond = nullptr,
                              int denseCap = 6000);

}  // namespace hmom
