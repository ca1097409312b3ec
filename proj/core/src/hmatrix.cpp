#include "hmom/hmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <Eigen/QR>
#include <Eigen/SVD>
#include <json.hpp>

namespace hmom {

AcaResult aca(int rows, int cols, const EntryEvaluator& entry,
              const AcaOptions& opts) {
  const int maxRank =
      opts.maxRank > 0 ? std::min({opts.maxRank, rows, cols}) : std::min(rows, cols);
  AcaResult res;
  CMat U(rows, maxRank), V(maxRank, cols);
  std::vector<char> rowUsed(rows, 0), colUsed(cols, 0);

  double frobSq = 0.0;
  int rank = 0;
  int nextRow = 0;
  int deadRows = 0;

  while (rank < maxRank) {
    // Residual row at the pivot row.
    Eigen::RowVectorXcd vrow(cols);
    for (int j = 0; j < cols; ++j) vrow[j] = entry(nextRow, j);
    if (rank > 0) vrow -= U.row(nextRow).head(rank) * V.topRows(rank);
    rowUsed[nextRow] = 1;

    int pivotCol = -1;
    double pivotAbs = 0.0;
    for (int j = 0; j < cols; ++j) {
      if (colUsed[j]) continue;
      double a = std::abs(vrow[j]);
      if (a > pivotAbs) {
        pivotAbs = a;
        pivotCol = j;
      }
    }
    // A residual row bounded below tol * |A|_F / sqrt(rows*cols) cannot
    // matter; sample a couple more rows before accepting convergence.
    double cells = std::sqrt(static_cast<double>(rows) * cols);
    bool dead = pivotCol < 0 || pivotAbs <= 1e-300 ||
                (rank > 0 && pivotAbs * cells <= opts.tol * std::sqrt(frobSq));
    if (dead) {
      ++deadRows;
      int candidate = -1;
      for (int i = 0; i < rows; ++i)
        if (!rowUsed[i]) {
          candidate = i;
          break;
        }
      if (candidate < 0 || deadRows >= 3) {
        res.converged = true;
        break;
      }
      nextRow = candidate;
      continue;
    }
    deadRows = 0;

    cplx pivot = vrow[pivotCol];
    Eigen::VectorXcd ucol(rows);
    for (int i = 0; i < rows; ++i) ucol[i] = entry(i, pivotCol);
    if (rank > 0) ucol -= U.leftCols(rank) * V.col(pivotCol).head(rank);
    ucol /= pivot;
    colUsed[pivotCol] = 1;

    double uNorm = ucol.norm(), vNorm = vrow.norm();
    // |A_k|_F^2 accumulated incrementally.
    cplx cross = 0.0;
    for (int l = 0; l < rank; ++l)
      cross += (U.col(l).adjoint() * ucol)(0, 0) *
               (vrow * V.row(l).adjoint())(0, 0);
    frobSq += uNorm * uNorm * vNorm * vNorm + 2.0 * cross.real();
    frobSq = std::max(frobSq, 0.0);

    U.col(rank) = ucol;
    V.row(rank) = vrow;
    ++rank;

    if (uNorm * vNorm <= opts.tol * std::sqrt(frobSq)) {
      res.converged = true;
      break;
    }

    // Next pivot row: largest new-column magnitude among unused rows.
    nextRow = -1;
    double best = -1.0;
    for (int i = 0; i < rows; ++i) {
      if (rowUsed[i]) continue;
      double a = std::abs(ucol[i]);
      if (a > best) {
        best = a;
        nextRow = i;
      }
    }
    if (nextRow < 0) break;  // rows exhausted
  }

  res.block.U = U.leftCols(rank);
  res.block.V = V.topRows(rank);
  return res;
}

LowRankBlock recompress(const LowRankBlock& block, double tol) {
  const int r = block.rank();
  if (r == 0) return block;
  Eigen::HouseholderQR<CMat> qrU(block.U);
  Eigen::HouseholderQR<CMat> qrV(block.V.adjoint());
  CMat Ru = qrU.matrixQR().topRows(r).triangularView<Eigen::Upper>();
  CMat Rv = qrV.matrixQR().topRows(r).triangularView<Eigen::Upper>();

  CMat core = Ru * Rv.adjoint();
  Eigen::JacobiSVD<CMat> svd(core, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();

  double total = sv.squaredNorm();
  double budget = tol * tol * total;
  int keep = r;
  double tail = 0.0;
  while (keep > 1) {
    double next = tail + sv[keep - 1] * sv[keep - 1];
    if (next > budget) break;
    tail = next;
    --keep;
  }

  CMat Qu = qrU.householderQ() * CMat::Identity(block.U.rows(), r);
  CMat Qv = qrV.householderQ() * CMat::Identity(block.V.cols(), r);

  LowRankBlock out;
  out.U = Qu * svd.matrixU().leftCols(keep) *
          sv.head(keep).asDiagonal();
  out.V = (Qv * svd.matrixV().leftCols(keep)).adjoint();
  return out;
}

CVec HMatrix::matvec(const CVec& x) const {
  if (x.size() != n_) throw std::invalid_argument("hmatvec: length mismatch");
  CVec y = CVec::Zero(n_);
  for (const auto& d : dense_) {
    y.segment(d.row0, d.M.rows()).noalias() +=
        d.M * x.segment(d.col0, d.M.cols());
  }
  for (const auto& lr : lowRank_) {
    y.segment(lr.row0, lr.lr.U.rows()).noalias() +=
        lr.lr.U * (lr.lr.V * x.segment(lr.col0, lr.lr.V.cols()));
  }
  return y;
}

size_t HMatrix::stored_complex_entries() const {
  size_t total = 0;
  for (const auto& d : dense_) total += static_cast<size_t>(d.M.size());
  for (const auto& lr : lowRank_)
    total += static_cast<size_t>(lr.lr.U.size() + lr.lr.V.size());
  return total;
}

std::string HMatrix::compression_report_json(const ClusterTree& tree) const {
  nlohmann::json j;
  j["n"] = n_;
  j["compressionTol"] = tol_;
  std::map<int, int> denseper, lrper;
  for (const auto& d : dense_) ++denseper[d.pair.level];
  for (const auto& lr : lowRank_) ++lrper[lr.pair.level];
  for (auto& [lvl, cnt] : denseper)
    j["perLevel"][std::to_string(lvl)]["nearDense"] = cnt;
  for (auto& [lvl, cnt] : lrper)
    j["perLevel"][std::to_string(lvl)]["farLowRank"] = cnt;
  std::map<int, int> rankHist;
  for (const auto& lr : lowRank_) ++rankHist[lr.lr.rank()];
  for (auto& [rank, cnt] : rankHist) j["rankHistogram"][std::to_string(rank)] = cnt;
  size_t stored = stored_complex_entries();
  j["storedComplexEntries"] = stored;
  j["denseComplexEntries"] = static_cast<size_t>(n_) * n_;
  j["memoryRatio"] =
      static_cast<double>(stored) / (static_cast<double>(n_) * n_);
  j["treeDepth"] = tree.max_depth();
  j["treeLeaves"] = tree.leaves().size();
  return j.dump(2);
}

HMatrix assemble_hmatrix(const EfieKernel& kernel, const ClusterTree& tree,
                         double eta, double tol) {
  if (!tree.is_identity_order())
    throw std::invalid_argument(
        "assemble_hmatrix requires a leaf-ordered mesh (build_clustered_mesh)");
  HMatrix H;
  H.n_ = kernel.size();
  H.tol_ = tol;

  std::vector<BlockPair> pairs = build_block_structure(tree, eta);
  // Empty edge ranges contribute nothing.
  pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                             [&](const BlockPair& p) {
                               return tree.node(p.testNode).num_edges() == 0 ||
                                      tree.node(p.sourceNode).num_edges() == 0;
                             }),
              pairs.end());

  std::vector<HMatrix::DensePart> dense(pairs.size());
  std::vector<HMatrix::LowRankPart> lowRank(pairs.size());
  std::vector<char> isDense(pairs.size(), 0);

#pragma omp parallel for schedule(dynamic)
  for (int p = 0; p < static_cast<int>(pairs.size()); ++p) {
    const BlockPair& bp = pairs[p];
    const ClusterNode& tn = tree.node(bp.testNode);
    const ClusterNode& sn = tree.node(bp.sourceNode);
    const int rows = tn.num_edges(), cols = sn.num_edges();
    const int row0 = tn.edgeBegin, col0 = sn.edgeBegin;

    auto entry = [&](int i, int j) {
      return kernel.z_entry(row0 + i, col0 + j);
    };

    bool asDense = bp.kind == BlockKind::nearDense;
    if (!asDense) {
      AcaOptions opts;
      opts.tol = tol;
      AcaResult r = aca(rows, cols, entry, opts);
      if (r.converged) {
        lowRank[p] = {bp, row0, col0, recompress(r.block, tol)};
      } else {
        asDense = true;  // stagnation: fall back to a dense fill
      }
    }
    if (asDense) {
      CMat M(rows, cols);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) M(i, j) = entry(i, j);
      dense[p] = {bp, row0, col0, std::move(M)};
      isDense[p] = 1;
    }
  }

  for (size_t p = 0; p < pairs.size(); ++p) {
    if (isDense[p])
      H.dense_.push_back(std::move(dense[p]));
    else
      H.lowRank_.push_back(std::move(lowRank[p]));
  }
  return H;
}

}  // namespace hmom
