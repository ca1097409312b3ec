#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hmom/cluster_tree.hpp"
#include "hmom/efie.hpp"
#include "hmom/types.hpp"

namespace hmom {

struct LowRankBlock {
  CMat U;  // rows x rank
  CMat V;  // rank x cols
  int rank() const { return static_cast<int>(U.cols()); }
};

using EntryEvaluator = std::function<cplx(int, int)>;

struct AcaOptions {
  double tol = 1e-3;
  int maxRank = 0;  // 0: min(rows, cols)
};

struct AcaResult {
  LowRankBlock block;
  bool converged = false;  // false: stagnation or rank exhausted
};

/// Partially pivoted adaptive cross approximation of an implicitly given
/// rows x cols block. Stops when |u_k||v_k| <= tol * |A_k|_F with the
/// incrementally accumulated Frobenius estimate.
AcaResult aca(int rows, int cols, const EntryEvaluator& entry,
              const AcaOptions& opts);

/// QR + truncated SVD pass; never increases the rank, and the dropped part
/// has Frobenius norm <= tol * |block|_F.
LowRankBlock recompress(const LowRankBlock& block, double tol);

class HMatrix {
 public:
  struct DensePart {
    BlockPair pair;
    int row0, col0;
    CMat M;
  };
  struct LowRankPart {
    BlockPair pair;
    int row0, col0;
    LowRankBlock lr;
  };

  int size() const { return n_; }
  double compression_tol() const { return tol_; }
  const std::vector<DensePart>& dense_blocks() const { return dense_; }
  const std::vector<LowRankPart>& lowrank_blocks() const { return lowRank_; }

  CVec matvec(const CVec& x) const;
  size_t stored_complex_entries() const;
  /// Per-level block counts, rank histogram, memory vs dense ratio.
  std::string compression_report_json(const ClusterTree& tree) const;

  friend HMatrix assemble_hmatrix(const EfieKernel& kernel,
                                  const ClusterTree& tree, double eta,
                                  double tol);

 private:
  int n_ = 0;
  double tol_ = 0.0;
  std::vector<DensePart> dense_;
  std::vector<LowRankPart> lowRank_;
};

/// Builds the compressed EFIE operator: near blocks filled densely, far
/// blocks via re-compressed ACA (dense fallback on ACA stagnation).
HMatrix assemble_hmatrix(const EfieKernel& kernel, const ClusterTree& tree,
                         double eta, double tol);

}  // namespace hmom
