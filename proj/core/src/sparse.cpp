#include "hmom/sparse.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace hmom {

cplx SparseComplexMatrix::at(int r, int c) const {
  for (int k = rowStart[r]; k < rowStart[r + 1]; ++k)
    if (colIndex[k] == c) return values[k];
  return 0.0;
}

void SparseBuilder::add(int r, int c, cplx v) {
  if (r < 0 || r >= n_ || c < 0 || c >= n_)
    throw std::out_of_range("SparseBuilder::add index out of range");
  rows_[r].emplace_back(c, v);
}

SparseComplexMatrix SparseBuilder::compress() const {
  SparseComplexMatrix A;
  A.N = n_;
  A.rowStart.assign(n_ + 1, 0);
  for (int r = 0; r < n_; ++r) {
    auto entries = rows_[r];
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    int unique = 0;
    for (size_t k = 0; k < entries.size();) {
      size_t e = k + 1;
      cplx sum = entries[k].second;
      while (e < entries.size() && entries[e].first == entries[k].first)
        sum += entries[e++].second;
      A.colIndex.push_back(entries[k].first);
      A.values.push_back(sum);
      ++unique;
      k = e;
    }
    A.rowStart[r + 1] = A.rowStart[r] + unique;
  }
  return A;
}

CVec spmv(const SparseComplexMatrix& A, const CVec& x) {
  if (x.size() != A.N) throw std::invalid_argument("spmv: length mismatch");
  CVec y = CVec::Zero(A.N);
  for (int r = 0; r < A.N; ++r) {
    cplx acc = 0.0;
    for (int k = A.rowStart[r]; k < A.rowStart[r + 1]; ++k)
      acc += A.values[k] * x[A.colIndex[k]];
    y[r] = acc;
  }
  return y;
}

SparseComplexMatrix sparse_identity(int n) {
  SparseBuilder b(n);
  for (int i = 0; i < n; ++i) b.add(i, i, 1.0);
  return b.compress();
}

void write_matrix_market(const SparseComplexMatrix& A, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "%%MatrixMarket matrix coordinate complex general\n";
  out << A.N << " " << A.N << " " << A.nnz() << "\n";
  out.precision(17);
  for (int r = 0; r < A.N; ++r)
    for (int k = A.rowStart[r]; k < A.rowStart[r + 1]; ++k)
      out << r + 1 << " " << A.colIndex[k] + 1 << " " << A.values[k].real()
          << " " << A.values[k].imag() << "\n";
}

void write_pattern_csv(const SparseComplexMatrix& A, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "row,col\n";
  for (int r = 0; r < A.N; ++r)
    for (int k = A.rowStart[r]; k < A.rowStart[r + 1]; ++k)
      out << r << "," << A.colIndex[k] << "\n";
}

}  // namespace hmom
