#pragma once

#include <cstddef>
#include <string>

#include "hmom/cluster_tree.hpp"
#include "hmom/efie.hpp"
#include "hmom/sparse.hpp"
#include "hmom/sparse_lu.hpp"

namespace hmom {

enum class PrecondVariant { triTridiagonal, blockTridiagonal };
enum class EntryMode { partialPair, fullEntry };

struct PrecondConfig {
  PrecondVariant variant = PrecondVariant::triTridiagonal;
  // partialPair accumulates per-triangle-pair terms (the triangle variant's
  // default); fullEntry stores the complete MoM entry once per pattern slot
  // (the block variant's default).
  EntryMode entryMode = EntryMode::partialPair;
  double pivotThreshold = 0.1;
};

/// Triangle-tridiagonal preconditioner: edge pair (m, n) enters the
/// pattern when some support triangles t_a of m and t_b of n are adjacent
/// in the linear triangle ordering (|a - b| <= 1). Boundary triangles use
/// only their existing neighbor.
SparseComplexMatrix build_tridiagonal(const EfieKernel& kernel,
                                      EntryMode mode = EntryMode::partialPair);

/// Leaf-block-tridiagonal preconditioner: support triangles in blocks i, j
/// with |i - j| <= 1 put (m, n) in the pattern; entries are full MoM
/// values by default. Blocks are the tree leaves, or the cut at the given
/// level when blockLevel >= 0 (groups of roughly 30 triangles).
SparseComplexMatrix build_block_tridiagonal(const EfieKernel& kernel,
                                            const ClusterTree& tree,
                                            EntryMode mode = EntryMode::fullEntry,
                                            int blockLevel = -1);

/// Partition depth giving blocks of about targetTriangles triangles.
int block_level_for(int numTriangles, int targetTriangles = 30);

struct MemoryReport {
  size_t nnz = 0;
  size_t bytes = 0;
};

MemoryReport memory_report(const SparseComplexMatrix& P);
MemoryReport memory_report(const SparseLu& F);

}  // namespace hmom
