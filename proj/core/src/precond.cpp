#include "hmom/precond.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace hmom {

namespace {

// Shared pattern machinery for both variants: triangles carry a group id
// (its own index, or its leaf index) and groups interact tridiagonally.
SparseComplexMatrix build_banded(const EfieKernel& kernel,
                                 const std::vector<int>& groupOfTriangle,
                                 int numGroups, EntryMode mode) {
  const SurfaceMesh& mesh = kernel.mesh();
  const int n = mesh.num_unknowns();
  if (n == 0) throw std::invalid_argument("empty mesh: no RWG unknowns");

  // Triangles per group, and edges supported on each group.
  std::vector<std::vector<int>> groupTris(numGroups);
  for (int t = 0; t < mesh.num_triangles(); ++t)
    groupTris[groupOfTriangle[t]].push_back(t);
  auto triEdges = mesh.triangle_edges();

  SparseBuilder builder(n);
  if (mode == EntryMode::partialPair) {
    // Accumulate the individual triangle-pair terms whose triangles sit in
    // adjacent groups; duplicates sum.
    for (int g = 0; g < numGroups; ++g) {
      for (int h = std::max(0, g - 1); h <= std::min(numGroups - 1, g + 1); ++h) {
        for (int ta : groupTris[g])
          for (int tb : groupTris[h])
            for (int m : triEdges[ta])
              for (int nEdge : triEdges[tb])
                builder.add(m, nEdge,
                            kernel.z_triangle_pair_contribution(m, nEdge, ta, tb));
      }
    }
  } else {
    // Collect the pattern, then store each full MoM entry exactly once.
    std::set<std::pair<int, int>> pattern;
    for (int g = 0; g < numGroups; ++g)
      for (int h = std::max(0, g - 1); h <= std::min(numGroups - 1, g + 1); ++h)
        for (int ta : groupTris[g])
          for (int tb : groupTris[h])
            for (int m : triEdges[ta])
              for (int nEdge : triEdges[tb]) pattern.emplace(m, nEdge);
    for (const auto& [m, nEdge] : pattern)
      builder.add(m, nEdge, kernel.z_entry(m, nEdge));
  }
  return builder.compress();
}

}  // namespace

SparseComplexMatrix build_tridiagonal(const EfieKernel& kernel, EntryMode mode) {
  const int numTris = kernel.mesh().num_triangles();
  std::vector<int> group(numTris);
  for (int t = 0; t < numTris; ++t) group[t] = t;
  return build_banded(kernel, group, numTris, mode);
}

SparseComplexMatrix build_block_tridiagonal(const EfieKernel& kernel,
                                            const ClusterTree& tree,
                                            EntryMode mode, int blockLevel) {
  const SurfaceMesh& mesh = kernel.mesh();
  std::vector<int> blockIds =
      blockLevel >= 0 ? tree.nodes_at_level(blockLevel) : tree.leaves();
  if (blockIds.empty()) throw std::invalid_argument("cluster tree not built");
  std::vector<int> group(mesh.num_triangles(), -1);
  for (size_t g = 0; g < blockIds.size(); ++g) {
    const ClusterNode& leaf = tree.node(blockIds[g]);
    for (int t = leaf.triBegin; t < leaf.triEnd; ++t)
      group[t] = static_cast<int>(g);
  }
  for (int t = 0; t < mesh.num_triangles(); ++t)
    if (group[t] < 0)
      throw std::invalid_argument(
          "cluster tree does not cover the mesh (built on another ordering?)");
  return build_banded(kernel, group, static_cast<int>(blockIds.size()), mode);
}

int block_level_for(int numTriangles, int targetTriangles) {
  if (numTriangles <= targetTriangles) return 0;
  double l = std::log2(static_cast<double>(numTriangles) / targetTriangles);
  return std::max(0, static_cast<int>(std::lround(l)));
}

MemoryReport memory_report(const SparseComplexMatrix& P) {
  MemoryReport r;
  r.nnz = static_cast<size_t>(P.nnz());
  r.bytes = r.nnz * (sizeof(cplx) + sizeof(int)) +
            P.rowStart.size() * sizeof(int);
  return r;
}

MemoryReport memory_report(const SparseLu& F) {
  MemoryReport r;
  r.nnz = F.fill_nnz();
  r.bytes = r.nnz * (sizeof(cplx) + sizeof(int)) +
            2 * (static_cast<size_t>(F.size()) + 1) * sizeof(int);
  return r;
}

}  // namespace hmom
