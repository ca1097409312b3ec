#pragma once

#include <string>
#include <vector>

#include "hmom/types.hpp"

namespace hmom {

/// Compressed-row complex sparse matrix, column indices strictly
/// increasing within each row.
struct SparseComplexMatrix {
  int N = 0;
  std::vector<int> rowStart;  // length N+1
  std::vector<int> colIndex;  // length nnz
  std::vector<cplx> values;   // ohms

  int nnz() const { return rowStart.empty() ? 0 : rowStart.back(); }
  cplx at(int r, int c) const;
};

/// Coordinate accumulator; duplicate (r, c) contributions are summed.
class SparseBuilder {
 public:
  explicit SparseBuilder(int n) : n_(n), rows_(n) {}
  void add(int r, int c, cplx v);
  SparseComplexMatrix compress() const;
  int size() const { return n_; }

 private:
  int n_;
  std::vector<std::vector<std::pair<int, cplx>>> rows_;
};

CVec spmv(const SparseComplexMatrix& A, const CVec& x);

SparseComplexMatrix sparse_identity(int n);

/// Matrix Market "coordinate complex general" export.
void write_matrix_market(const SparseComplexMatrix& A, const std::string& path);

/// (row, col) pairs, one per line after a header, for sparsity plots.
void write_pattern_csv(const SparseComplexMatrix& A, const std::string& path);

}  // namespace hmom
