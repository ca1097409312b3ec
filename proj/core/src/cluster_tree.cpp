#include "hmom/cluster_tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hmom {

namespace {

Box triangle_range_box(const SurfaceMesh& mesh, const std::vector<int>& order,
                       int begin, int end) {
  Box box;
  for (int i = begin; i < end; ++i)
    for (int v : mesh.triangles[order[i]].v) box.expand(mesh.vertices[v]);
  return box;
}

}  // namespace

ClusterTree ClusterTree::build(const SurfaceMesh& mesh, int leafSize,
                               int maxLevel) {
  if (mesh.triangles.empty()) throw std::invalid_argument("empty mesh");
  if (leafSize < 1) throw std::invalid_argument("leafSize must be >= 1");

  ClusterTree tree;
  tree.leafSize_ = leafSize;
  tree.order_.resize(mesh.triangles.size());
  std::iota(tree.order_.begin(), tree.order_.end(), 0);

  // Edges per triangle-as-plus: a node's basis count is the sum over its
  // triangle members.
  std::vector<int> plusCount(mesh.triangles.size(), 0);
  for (const auto& e : mesh.edges) ++plusCount[e.plusTri];

  struct Task {
    int nodeId, begin, end, level;
  };
  std::vector<Task> stack;
  tree.nodes_.push_back({});
  stack.push_back({0, 0, static_cast<int>(mesh.triangles.size()), 0});

  while (!stack.empty()) {
    Task task = stack.back();
    stack.pop_back();
    ClusterNode& n0 = tree.nodes_[task.nodeId];
    n0.triBegin = task.begin;
    n0.triEnd = task.end;
    n0.level = task.level;
    n0.box = triangle_range_box(mesh, tree.order_, task.begin, task.end);

    int edgeCount = 0;
    for (int i = task.begin; i < task.end; ++i)
      edgeCount += plusCount[tree.order_[i]];

    bool levelCapped = maxLevel >= 0 && task.level >= maxLevel;
    if (edgeCount <= leafSize || levelCapped || task.end - task.begin < 2)
      continue;  // leaf

    Vec3 ext = tree.nodes_[task.nodeId].box.extent();
    if (ext.norm() <= 0.0)
      throw std::runtime_error("degenerate cluster: coincident centroids");
    int axis = 0;
    if (ext[1] > ext[axis]) axis = 1;
    if (ext[2] > ext[axis]) axis = 2;

    auto first = tree.order_.begin() + task.begin;
    auto last = tree.order_.begin() + task.end;
    int mid = task.begin + (task.end - task.begin) / 2;
    std::nth_element(first, tree.order_.begin() + mid, last,
                     [&](int a, int b) {
                       double ca = mesh.triangles[a].centroid[axis];
                       double cb = mesh.triangles[b].centroid[axis];
                       return ca < cb || (ca == cb && a < b);
                     });
    // Deterministic order inside each half.
    std::sort(first, tree.order_.begin() + mid, [&](int a, int b) {
      double ca = mesh.triangles[a].centroid[axis];
      double cb = mesh.triangles[b].centroid[axis];
      return ca < cb || (ca == cb && a < b);
    });
    std::sort(tree.order_.begin() + mid, last, [&](int a, int b) {
      double ca = mesh.triangles[a].centroid[axis];
      double cb = mesh.triangles[b].centroid[axis];
      return ca < cb || (ca == cb && a < b);
    });

    int leftId = static_cast<int>(tree.nodes_.size());
    tree.nodes_.push_back({});
    int rightId = static_cast<int>(tree.nodes_.size());
    tree.nodes_.push_back({});
    tree.nodes_[task.nodeId].left = leftId;
    tree.nodes_[task.nodeId].right = rightId;
    stack.push_back({rightId, mid, task.end, task.level + 1});
    stack.push_back({leftId, task.begin, mid, task.level + 1});
  }

  // Edge ranges are meaningful when triangles are already in leaf order:
  // edges are numbered by plus triangle, so node ranges are contiguous.
  if (tree.is_identity_order()) {
    std::vector<int> edgeStart(mesh.triangles.size() + 1, 0);
    for (const auto& e : mesh.edges) ++edgeStart[e.plusTri + 1];
    for (size_t t = 1; t < edgeStart.size(); ++t)
      edgeStart[t] += edgeStart[t - 1];
    for (auto& n : tree.nodes_) {
      n.edgeBegin = edgeStart[n.triBegin];
      n.edgeEnd = edgeStart[n.triEnd];
    }
  }
  return tree;
}

bool ClusterTree::is_identity_order() const {
  for (size_t i = 0; i < order_.size(); ++i)
    if (order_[i] != static_cast<int>(i)) return false;
  return true;
}

int ClusterTree::max_depth() const {
  int d = 0;
  for (const auto& n : nodes_) d = std::max(d, n.level);
  return d;
}

std::vector<int> ClusterTree::leaves() const {
  std::vector<int> out;
  // Depth-first, left before right, yields left-to-right triangle ranges.
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    const ClusterNode& n = nodes_[id];
    if (n.is_leaf()) {
      out.push_back(id);
    } else {
      stack.push_back(n.right);
      stack.push_back(n.left);
    }
  }
  return out;
}

std::vector<int> ClusterTree::nodes_at_level(int level) const {
  std::vector<int> out;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    const ClusterNode& n = nodes_[id];
    if (n.level == level || n.is_leaf()) {
      out.push_back(id);
    } else {
      stack.push_back(n.right);
      stack.push_back(n.left);
    }
  }
  std::sort(out.begin(), out.end(), [this](int a, int b) {
    return nodes_[a].triBegin < nodes_[b].triBegin;
  });
  return out;
}

bool admissible(const ClusterNode& t, const ClusterNode& s, double eta) {
  double dist = box_distance(t.box, s.box);
  double minDia = std::min(t.box.diameter(), s.box.diameter());
  return eta * dist >= minDia;
}

std::pair<SurfaceMesh, ClusterTree> build_clustered_mesh(
    const SurfaceMesh& mesh, int leafSize, int maxLevel) {
  ClusterTree tree = ClusterTree::build(mesh, leafSize, maxLevel);
  if (tree.is_identity_order()) return {mesh, std::move(tree)};
  SurfaceMesh ordered = reorder_triangles(mesh, tree.triangle_order());
  ClusterTree tree2 = ClusterTree::build(ordered, leafSize, maxLevel);
  if (!tree2.is_identity_order())
    throw std::logic_error("cluster bisection is not idempotent");
  return {std::move(ordered), std::move(tree2)};
}

std::vector<BlockPair> build_block_structure(const ClusterTree& tree,
                                             double eta) {
  std::vector<BlockPair> out;
  std::vector<std::pair<int, int>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [ti, si] = stack.back();
    stack.pop_back();
    const ClusterNode& t = tree.node(ti);
    const ClusterNode& s = tree.node(si);
    int level = std::max(t.level, s.level);
    if (admissible(t, s, eta)) {
      out.push_back({ti, si, BlockKind::farLowRank, level});
      continue;
    }
    if (t.is_leaf() && s.is_leaf()) {
      out.push_back({ti, si, BlockKind::nearDense, level});
      continue;
    }
    if (!t.is_leaf() && !s.is_leaf()) {
      stack.push_back({t.left, s.left});
      stack.push_back({t.left, s.right});
      stack.push_back({t.right, s.left});
      stack.push_back({t.right, s.right});
    } else if (t.is_leaf()) {
      stack.push_back({ti, s.left});
      stack.push_back({ti, s.right});
    } else {
      stack.push_back({t.left, si});
      stack.push_back({t.right, si});
    }
  }
  return out;
}

}  // namespace hmom
