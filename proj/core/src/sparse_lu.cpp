#include "hmom/sparse_lu.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hmom {

namespace {

// Column-compressed copy of A (CSC), row indices ascending.
struct Csc {
  int n;
  std::vector<int> p, i;
  std::vector<cplx> x;
};

Csc to_csc(const SparseComplexMatrix& A) {
  Csc c;
  c.n = A.N;
  c.p.assign(A.N + 1, 0);
  for (int k = 0; k < A.nnz(); ++k) ++c.p[A.colIndex[k] + 1];
  for (int j = 0; j < A.N; ++j) c.p[j + 1] += c.p[j];
  c.i.resize(A.nnz());
  c.x.resize(A.nnz());
  std::vector<int> next(c.p.begin(), c.p.end() - 1);
  for (int r = 0; r < A.N; ++r)
    for (int k = A.rowStart[r]; k < A.rowStart[r + 1]; ++k) {
      int dst = next[A.colIndex[k]]++;
      c.i[dst] = r;
      c.x[dst] = A.values[k];
    }
  return c;
}

}  // namespace

SparseLu SparseLu::factorize(const SparseComplexMatrix& A,
                             double pivotThreshold) {
  if (A.N <= 0) throw std::invalid_argument("factorize: empty matrix");
  if (pivotThreshold <= 0.0 || pivotThreshold > 1.0)
    throw std::invalid_argument("pivotThreshold must be in (0, 1]");
  const int n = A.N;
  const Csc Ac = to_csc(A);

  double maxAbs = 0.0;
  for (const cplx& v : A.values) maxAbs = std::max(maxAbs, std::abs(v));
  const double tinyPivot = 1e-14 * maxAbs;

  SparseLu F;
  F.n_ = n;
  F.lp_.assign(n + 1, 0);
  F.up_.assign(n + 1, 0);
  F.pinv_.assign(n, -1);
  F.li_.reserve(static_cast<size_t>(4) * A.nnz());
  F.lx_.reserve(static_cast<size_t>(4) * A.nnz());
  F.ui_.reserve(static_cast<size_t>(4) * A.nnz());
  F.ux_.reserve(static_cast<size_t>(4) * A.nnz());

  std::vector<cplx> x(n, 0.0);
  std::vector<char> marked(n, 0);
  std::vector<int> reach(n), stack(n), pstack(n);

  for (int j = 0; j < n; ++j) {
    // Symbolic: rows reachable from pattern(A(:,j)) through finished L
    // columns, in topological order.
    int top = n;
    for (int p = Ac.p[j]; p < Ac.p[j + 1]; ++p) {
      int seed = Ac.i[p];
      if (marked[seed]) continue;
      int head = 0;
      stack[0] = seed;
      while (head >= 0) {
        int node = stack[head];
        int jcol = F.pinv_[node];
        if (!marked[node]) {
          marked[node] = 1;
          pstack[head] = (jcol < 0) ? 0 : F.lp_[jcol];
        }
        bool descended = false;
        if (jcol >= 0) {
          for (int q = pstack[head]; q < F.lp_[jcol + 1]; ++q) {
            int next = F.li_[q];
            if (marked[next]) continue;
            pstack[head] = q + 1;
            stack[++head] = next;
            descended = true;
            break;
          }
        }
        if (!descended) {
          reach[--top] = node;
          --head;
        }
      }
    }

    // Numeric: scatter A(:,j) and eliminate through L.
    for (int p = top; p < n; ++p) x[reach[p]] = 0.0;
    for (int p = Ac.p[j]; p < Ac.p[j + 1]; ++p) x[Ac.i[p]] = Ac.x[p];
    for (int p = top; p < n; ++p) {
      int node = reach[p];
      int jcol = F.pinv_[node];
      if (jcol < 0) continue;
      cplx xval = x[node];
      // First entry of every L column is its unit pivot; skip it.
      for (int q = F.lp_[jcol] + 1; q < F.lp_[jcol + 1]; ++q)
        x[F.li_[q]] -= F.lx_[q] * xval;
    }

    // Pivot: largest unpivoted magnitude, preferring the natural diagonal
    // within the threshold.
    int ipiv = -1;
    double amax = -1.0;
    for (int p = top; p < n; ++p) {
      int node = reach[p];
      if (F.pinv_[node] >= 0) continue;
      double a = std::abs(x[node]);
      if (a > amax) {
        amax = a;
        ipiv = node;
      }
    }
    if (ipiv < 0 || amax <= tinyPivot)
      throw std::runtime_error(
          "singular preconditioner: no acceptable pivot in row/column " +
          std::to_string(j) + " (max magnitude " + std::to_string(amax) + ")");
    if (marked[j] && F.pinv_[j] < 0 && std::abs(x[j]) >= pivotThreshold * amax)
      ipiv = j;

    const cplx pivot = x[ipiv];
    F.pinv_[ipiv] = j;

    // Column j of U (finished rows), diagonal last.
    for (int p = top; p < n; ++p) {
      int node = reach[p];
      if (F.pinv_[node] >= 0 && node != ipiv) {
        F.ui_.push_back(F.pinv_[node]);
        F.ux_.push_back(x[node]);
      }
      marked[node] = 0;  // reset for the next column
    }
    F.ui_.push_back(j);
    F.ux_.push_back(pivot);
    F.up_[j + 1] = static_cast<int>(F.ui_.size());

    // Column j of L: unit pivot first, then scaled unpivoted rows.
    F.li_.push_back(ipiv);
    F.lx_.push_back(1.0);
    for (int p = top; p < n; ++p) {
      int node = reach[p];
      if (F.pinv_[node] < 0) {
        F.li_.push_back(node);
        F.lx_.push_back(x[node] / pivot);
      }
    }
    F.lp_[j + 1] = static_cast<int>(F.li_.size());
  }

  // Map L's row indices into pivot order; L becomes unit lower triangular.
  for (int& idx : F.li_) idx = F.pinv_[idx];
  return F;
}

CVec SparseLu::apply(const CVec& b) const {
  if (b.size() != n_) throw std::invalid_argument("SparseLu::apply: length mismatch");
  CVec x(n_);
  for (int i = 0; i < n_; ++i) x[pinv_[i]] = b[i];
  // Forward: L y = P b (unit diagonal first per column).
  for (int j = 0; j < n_; ++j) {
    cplx xj = x[j];
    for (int p = lp_[j] + 1; p < lp_[j + 1]; ++p) x[li_[p]] -= lx_[p] * xj;
  }
  // Backward: U z = y (diagonal stored last per column).
  for (int j = n_ - 1; j >= 0; --j) {
    cplx xj = x[j] / ux_[up_[j + 1] - 1];
    x[j] = xj;
    for (int p = up_[j]; p < up_[j + 1] - 1; ++p) x[ui_[p]] -= ux_[p] * xj;
  }
  return x;
}

}  // namespace hmom
