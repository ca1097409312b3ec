#pragma once

#include <utility>
#include <vector>

#include "hmom/mesh.hpp"
#include "hmom/types.hpp"

namespace hmom {

struct ClusterNode {
  int triBegin = 0, triEnd = 0;    // contiguous triangle range
  int edgeBegin = 0, edgeEnd = 0;  // contiguous RWG range (by plus triangle)
  Box box;                         // bounds all member triangle vertices
  int level = 0;
  int left = -1, right = -1;  // node indices; -1 means leaf

  bool is_leaf() const { return left < 0; }
  int num_triangles() const { return triEnd - triBegin; }
  int num_edges() const { return edgeEnd - edgeBegin; }
};

/// Binary cluster tree over triangles: recursive bisection at the median
/// centroid along the longest box axis. A node becomes a leaf once it holds
/// at most leafSize basis elements (RWG edges), or at maxLevel when set.
class ClusterTree {
 public:
  static ClusterTree build(const SurfaceMesh& mesh, int leafSize = 30,
                           int maxLevel = -1);

  const std::vector<ClusterNode>& nodes() const { return nodes_; }
  const ClusterNode& node(int id) const { return nodes_[id]; }
  const ClusterNode& root() const { return nodes_[0]; }
  int leaf_size() const { return leafSize_; }
  int max_depth() const;

  /// Triangle permutation (perm[newId] = oldId) placing each leaf's
  /// triangles contiguously, leaves left to right.
  const std::vector<int>& triangle_order() const { return order_; }
  bool is_identity_order() const;

  /// Leaf node ids, left to right. Valid block/edge ranges only when the
  /// tree was built on a leaf-ordered mesh (see build_clustered_mesh).
  std::vector<int> leaves() const;

  /// Nodes cut at the given depth (shallower leaves pass through), left to
  /// right: the block partition "at binary-tree level L".
  std::vector<int> nodes_at_level(int level) const;

 private:
  std::vector<ClusterNode> nodes_;
  std::vector<int> order_;
  int leafSize_ = 30;
};

/// Admissibility: eta * dist(boxes) >= min(diam_t, diam_s), with the
/// minimum point-set distance between the two bounding boxes.
bool admissible(const ClusterNode& t, const ClusterNode& s, double eta);

/// Reorders the mesh into tree-leaf order and rebuilds the tree on it, so
/// every node's triangle and edge ranges are contiguous.
std::pair<SurfaceMesh, ClusterTree> build_clustered_mesh(
    const SurfaceMesh& mesh, int leafSize = 30, int maxLevel = -1);

enum class BlockKind { nearDense, farLowRank };

struct BlockPair {
  int testNode = -1;
  int sourceNode = -1;
  BlockKind kind = BlockKind::nearDense;
  int level = 0;
};

/// Top-down dual traversal: admissible pairs become far low-rank blocks and
/// stop the recursion; inadmissible leaf pairs become near dense blocks.
/// Every (test edge, source edge) pair is covered exactly once.
std::vector<BlockPair> build_block_structure(const ClusterTree& tree,
                                             double eta);

}  // namespace hmom
