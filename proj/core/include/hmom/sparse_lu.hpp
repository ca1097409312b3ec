#pragma once

#include <vector>

#include "hmom/sparse.hpp"
#include "hmom/types.hpp"

namespace hmom {

/// Sparse LU factorization P_row * A = L * U in natural column order with
/// threshold partial pivoting (left-looking Gilbert-Peierls). L is unit
/// lower triangular, U upper triangular with nonzero diagonal.
class SparseLu {
 public:
  /// Throws when a pivot falls below 1e-14 * max|A|, naming the row.
  static SparseLu factorize(const SparseComplexMatrix& A,
                            double pivotThreshold = 0.1);

  /// Solves A x = b by permuted forward/back substitution; cost is
  /// proportional to fill_nnz().
  CVec apply(const CVec& b) const;

  int size() const { return n_; }
  size_t nnz_l() const { return lx_.size(); }
  size_t nnz_u() const { return ux_.size(); }
  size_t fill_nnz() const { return lx_.size() + ux_.size(); }

 private:
  int n_ = 0;
  std::vector<int> lp_, li_;
  std::vector<cplx> lx_;
  std::vector<int> up_, ui_;
  std::vector<cplx> ux_;
  std::vector<int> pinv_;  // pinv_[originalRow] = pivot step
};

}  // namespace hmom
