#pragma once

#include <array>
#include <string>
#include <vector>

#include "hmom/types.hpp"

namespace hmom {

struct Triangle {
  std::array<int, 3> v{-1, -1, -1};
  double area = 0.0;
  Vec3 centroid = Vec3::Zero();
  Vec3 normal = Vec3::Zero();
};

/// Rao-Wilton-Glisson basis: one unknown per interior edge. The edge's two
/// incident triangles are "plus" (lower index) and "minus"; freeVtx* is the
/// triangle vertex opposite the edge.
struct RwgBasis {
  std::array<int, 2> v{-1, -1};
  int plusTri = -1;
  int minusTri = -1;
  int freeVtxPlus = -1;
  int freeVtxMinus = -1;
  double edgeLength = 0.0;
};

struct SurfaceMesh {
  std::vector<Vec3> vertices;
  std::vector<Triangle> triangles;
  std::vector<RwgBasis> edges;
  Box boundingBox;

  int num_unknowns() const { return static_cast<int>(edges.size()); }
  int num_triangles() const { return static_cast<int>(triangles.size()); }

  /// Edge indices supported on each triangle (at most 3 interior edges).
  std::vector<std::vector<int>> triangle_edges() const;

  double total_area() const;
  double min_edge_length() const;
  double max_edge_length() const;
};

/// Builds a validated mesh from raw vertex/triangle soup: merges vertices
/// within mergeTol, derives triangle metrics, and constructs the RWG edge
/// set. Throws on degenerate triangles and non-manifold edges (an interior
/// edge shared by more than two triangles).
SurfaceMesh make_mesh(std::vector<Vec3> vertices,
                      std::vector<std::array<int, 3>> triVertexIds,
                      double mergeTol = 1e-9);

/// Rectangular PEC plate in the z=0 plane, structured right-triangle grid
/// with cell size close to h. Triangles are emitted row-major, lower then
/// upper triangle per cell, so consecutive indices form strips.
SurfaceMesh mesh_plate(double sideX, double sideY, double h);

/// Geodesic sphere: icosahedron subdivided at frequency f chosen from the
/// target edge length h, vertices projected to the sphere. N = 30 f^2
/// RWG bases, all normals outward.
SurfaceMesh mesh_sphere(double radius, double h);

/// Subdivision frequency mesh_sphere would pick for a target edge length.
int sphere_frequency(double radius, double h);

/// Applies a triangle permutation (perm[newId] = oldId) and rebuilds the
/// RWG numbering. Geometry is unchanged; edge indices are renumbered by
/// their (plus, minus) triangle pair so spatially close triangles yield
/// close edge indices.
SurfaceMesh reorder_triangles(const SurfaceMesh& mesh,
                              const std::vector<int>& perm);

}  // namespace hmom
