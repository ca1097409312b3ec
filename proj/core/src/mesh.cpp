#include "hmom/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace hmom {

std::vector<std::vector<int>> SurfaceMesh::triangle_edges() const {
  std::vector<std::vector<int>> te(triangles.size());
  for (size_t e = 0; e < edges.size(); ++e) {
    te[edges[e].plusTri].push_back(static_cast<int>(e));
    te[edges[e].minusTri].push_back(static_cast<int>(e));
  }
  return te;
}

double SurfaceMesh::total_area() const {
  double a = 0.0;
  for (const auto& t : triangles) a += t.area;
  return a;
}

double SurfaceMesh::min_edge_length() const {
  double m = std::numeric_limits<double>::max();
  for (const auto& t : triangles)
    for (int i = 0; i < 3; ++i)
      m = std::min(m, (vertices[t.v[i]] - vertices[t.v[(i + 1) % 3]]).norm());
  return triangles.empty() ? 0.0 : m;
}

double SurfaceMesh::max_edge_length() const {
  double m = 0.0;
  for (const auto& t : triangles)
    for (int i = 0; i < 3; ++i)
      m = std::max(m, (vertices[t.v[i]] - vertices[t.v[(i + 1) % 3]]).norm());
  return m;
}

namespace {

// Spatial-hash vertex merger: vertices closer than tol collapse to one id.
class VertexMerger {
 public:
  explicit VertexMerger(double tol) : tol_(tol) {}

  int add(const Vec3& p) {
    long ix = static_cast<long>(std::floor(p.x() / tol_));
    long iy = static_cast<long>(std::floor(p.y() / tol_));
    long iz = static_cast<long>(std::floor(p.z() / tol_));
    for (long dx = -1; dx <= 1; ++dx)
      for (long dy = -1; dy <= 1; ++dy)
        for (long dz = -1; dz <= 1; ++dz) {
          auto it = cells_.find(key(ix + dx, iy + dy, iz + dz));
          if (it == cells_.end()) continue;
          for (int id : it->second)
            if ((points_[id] - p).norm() <= tol_) return id;
        }
    int id = static_cast<int>(points_.size());
    points_.push_back(p);
    cells_[key(ix, iy, iz)].push_back(id);
    return id;
  }

  std::vector<Vec3> take() { return std::move(points_); }

 private:
  static uint64_t key(long x, long y, long z) {
    uint64_t h = 1469598103934665603ull;
    for (long v : {x, y, z}) {
      h ^= static_cast<uint64_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
  double tol_;
  std::vector<Vec3> points_;
  std::unordered_map<uint64_t, std::vector<int>> cells_;
};

int third_vertex(const Triangle& t, int a, int b) {
  for (int i = 0; i < 3; ++i)
    if (t.v[i] != a && t.v[i] != b) return t.v[i];
  return -1;
}

void build_rwg(SurfaceMesh& mesh) {
  std::map<std::pair<int, int>, std::vector<int>> edgeTris;
  for (size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto& v = mesh.triangles[t].v;
    for (int i = 0; i < 3; ++i) {
      int a = v[i], b = v[(i + 1) % 3];
      if (a > b) std::swap(a, b);
      edgeTris[{a, b}].push_back(static_cast<int>(t));
    }
  }
  mesh.edges.clear();
  for (const auto& [ev, tris] : edgeTris) {
    if (tris.size() > 2)
      throw std::runtime_error(
          "non-manifold edge (" + std::to_string(ev.first) + "," +
          std::to_string(ev.second) + ") shared by " +
          std::to_string(tris.size()) + " triangles");
    if (tris.size() != 2) continue;  // boundary edge carries no unknown
    RwgBasis e;
    e.v = {ev.first, ev.second};
    e.plusTri = std::min(tris[0], tris[1]);
    e.minusTri = std::max(tris[0], tris[1]);
    e.freeVtxPlus = third_vertex(mesh.triangles[e.plusTri], ev.first, ev.second);
    e.freeVtxMinus = third_vertex(mesh.triangles[e.minusTri], ev.first, ev.second);
    e.edgeLength = (mesh.vertices[ev.first] - mesh.vertices[ev.second]).norm();
    mesh.edges.push_back(e);
  }
  // Deterministic numbering: edges follow their triangle pair so block and
  // band structures in edge space track the triangle ordering.
  std::sort(mesh.edges.begin(), mesh.edges.end(),
            [](const RwgBasis& a, const RwgBasis& b) {
              return std::tie(a.plusTri, a.minusTri, a.v) <
                     std::tie(b.plusTri, b.minusTri, b.v);
            });
}

}  // namespace

SurfaceMesh make_mesh(std::vector<Vec3> vertices,
                      std::vector<std::array<int, 3>> triVertexIds,
                      double mergeTol) {
  SurfaceMesh mesh;
  std::vector<int> remap(vertices.size());
  if (mergeTol > 0.0) {
    VertexMerger merger(mergeTol);
    for (size_t i = 0; i < vertices.size(); ++i) {
      if (!vertices[i].allFinite())
        throw std::runtime_error("non-finite vertex coordinate at index " +
                                 std::to_string(i));
      remap[i] = merger.add(vertices[i]);
    }
    mesh.vertices = merger.take();
  } else {
    std::iota(remap.begin(), remap.end(), 0);
    mesh.vertices = std::move(vertices);
  }

  mesh.triangles.reserve(triVertexIds.size());
  for (size_t t = 0; t < triVertexIds.size(); ++t) {
    Triangle tri;
    for (int i = 0; i < 3; ++i) {
      int vid = triVertexIds[t][i];
      if (vid < 0 || vid >= static_cast<int>(remap.size()))
        throw std::runtime_error("triangle " + std::to_string(t) +
                                 " references invalid vertex " +
                                 std::to_string(vid));
      tri.v[i] = remap[vid];
    }
    if (tri.v[0] == tri.v[1] || tri.v[1] == tri.v[2] || tri.v[0] == tri.v[2])
      throw std::runtime_error("degenerate triangle " + std::to_string(t) +
                               " (repeated vertex after merge)");
    const Vec3 &a = mesh.vertices[tri.v[0]], &b = mesh.vertices[tri.v[1]],
               &c = mesh.vertices[tri.v[2]];
    Vec3 n = (b - a).cross(c - a);
    tri.area = 0.5 * n.norm();
    if (tri.area <= 0.0)
      throw std::runtime_error("zero-area triangle " + std::to_string(t));
    tri.normal = n.normalized();
    tri.centroid = (a + b + c) / 3.0;
    mesh.triangles.push_back(tri);
  }

  for (const auto& v : mesh.vertices) mesh.boundingBox.expand(v);
  build_rwg(mesh);
  return mesh;
}

SurfaceMesh mesh_plate(double sideX, double sideY, double h) {
  if (sideX <= 0 || sideY <= 0 || h <= 0)
    throw std::invalid_argument("plate dimensions and h must be positive");
  if (h > sideX || h > sideY)
    throw std::invalid_argument("target edge length exceeds plate side");
  int nx = std::max(1, static_cast<int>(std::lround(sideX / h)));
  int ny = std::max(1, static_cast<int>(std::lround(sideY / h)));
  double dx = sideX / nx, dy = sideY / ny;

  std::vector<Vec3> verts;
  verts.reserve(static_cast<size_t>(nx + 1) * (ny + 1));
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i)
      verts.emplace_back(i * dx, j * dy, 0.0);

  auto vid = [nx](int i, int j) { return j * (nx + 1) + i; };
  std::vector<std::array<int, 3>> tris;
  tris.reserve(static_cast<size_t>(2) * nx * ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      tris.push_back({vid(i, j), vid(i + 1, j), vid(i, j + 1)});
      tris.push_back({vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)});
    }
  return make_mesh(std::move(verts), std::move(tris));
}

int sphere_frequency(double radius, double h) {
  if (radius <= 0 || h <= 0)
    throw std::invalid_argument("radius and h must be positive");
  // Icosahedron edge chord for circumradius R.
  double chord = radius * 4.0 / std::sqrt(10.0 + 2.0 * std::sqrt(5.0));
  int f = std::max(1, static_cast<int>(std::lround(chord / h)));
  if (f > 1024)
    throw std::invalid_argument("target edge length too small (subdivision frequency " +
                                std::to_string(f) + " exceeds 1024)");
  return f;
}

SurfaceMesh mesh_sphere(double radius, double h) {
  int f = sphere_frequency(radius, h);
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  std::vector<Vec3> base = {
      {-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi},  {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1}};
  for (auto& v : base) v = radius * v.normalized();
  static const int faces[20][3] = {
      {0, 11, 5},  {0, 5, 1},   {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},   {5, 11, 4},  {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},   {3, 4, 2},   {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},   {2, 4, 11},  {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  std::vector<Vec3> verts;
  std::vector<std::array<int, 3>> tris;
  for (const auto& face : faces) {
    const Vec3 &A = base[face[0]], &B = base[face[1]], &C = base[face[2]];
    // Barycentric grid on the face, projected to the sphere.
    auto gridPoint = [&](int i, int j) {
      Vec3 p = A + (static_cast<double>(i) / f) * (B - A) +
               (static_cast<double>(j) / f) * (C - A);
      return Vec3(radius * p.normalized());
    };
    int base0 = static_cast<int>(verts.size());
    std::vector<int> rowStart(f + 1);
    int count = 0;
    for (int i = 0; i <= f; ++i) {
      rowStart[i] = count;
      count += f + 1 - i;
    }
    for (int i = 0; i <= f; ++i)
      for (int j = 0; j <= f - i; ++j) verts.push_back(gridPoint(i, j));
    auto id = [&](int i, int j) { return base0 + rowStart[i] + j; };
    for (int i = 0; i < f; ++i)
      for (int j = 0; j < f - i; ++j) {
        tris.push_back({id(i, j), id(i + 1, j), id(i, j + 1)});
        if (j < f - i - 1)
          tris.push_back({id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
      }
  }
  // Seam vertices from different faces differ only by rounding; merge scale
  // tracks the geometry.
  SurfaceMesh mesh = make_mesh(std::move(verts), std::move(tris),
                               std::max(1e-9, 1e-12 * radius));
  // Flip any inward-wound triangle so all normals point outward.
  std::vector<std::array<int, 3>> fixed;
  fixed.reserve(mesh.triangles.size());
  bool anyFlip = false;
  for (const auto& t : mesh.triangles) {
    if (t.normal.dot(t.centroid) < 0.0) {
      fixed.push_back({t.v[0], t.v[2], t.v[1]});
      anyFlip = true;
    } else {
      fixed.push_back(t.v);
    }
  }
  if (anyFlip) mesh = make_mesh(mesh.vertices, fixed, 0.0);
  return mesh;
}

SurfaceMesh reorder_triangles(const SurfaceMesh& mesh,
                              const std::vector<int>& perm) {
  if (perm.size() != mesh.triangles.size())
    throw std::invalid_argument("permutation size mismatch");
  SurfaceMesh out;
  out.vertices = mesh.vertices;
  out.boundingBox = mesh.boundingBox;
  out.triangles.reserve(mesh.triangles.size());
  std::vector<char> seen(mesh.triangles.size(), 0);
  for (int oldId : perm) {
    if (oldId < 0 || oldId >= static_cast<int>(mesh.triangles.size()) ||
        seen[oldId])
      throw std::invalid_argument("invalid triangle permutation");
    seen[oldId] = 1;
    out.triangles.push_back(mesh.triangles[oldId]);
  }
  // Rebuilding the edge set renumbers bases and reassigns plus/minus by the
  // new triangle indices; geometry and adjacency are untouched.
  std::vector<std::array<int, 3>> ids;
  ids.reserve(out.triangles.size());
  for (const auto& t : out.triangles) ids.push_back(t.v);
  return make_mesh(out.vertices, ids, 0.0);
}

}  // namespace hmom
