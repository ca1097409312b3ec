#include "hmom/efie.hpp"

#include <cmath>
#include <stdexcept>

#include "hmom/singular.hpp"

namespace hmom {

namespace {

inline cplx green(double k, double r) {
  double kr = k * r;
  return cplx(std::cos(kr), -std::sin(kr)) / (4.0 * kPi * r);
}

// (exp(-jkR) - 1) / (4 pi R): smooth remainder after extracting 1/(4 pi R).
inline cplx green_smooth(double k, double r) {
  double kr = k * r;
  if (kr < 1e-8)
    return cplx(-0.5 * k * kr, -k * (1.0 - kr * kr / 6.0)) / (4.0 * kPi);
  return cplx(std::cos(kr) - 1.0, -std::sin(kr)) / (4.0 * kPi * r);
}

}  // namespace

EfieKernel::EfieKernel(const SurfaceMesh& mesh, const PhysicsParams& physics,
                       QuadratureConfig quad)
    : mesh_(mesh), physics_(physics), quad_(quad) {
  const auto& rule = tri_quad_rule(quad_.farDegree);
  farQuad_.reserve(mesh_.triangles.size());
  maxEdge_.reserve(mesh_.triangles.size());
  for (const auto& t : mesh_.triangles) {
    const Vec3 &a = mesh_.vertices[t.v[0]], &b = mesh_.vertices[t.v[1]],
               &c = mesh_.vertices[t.v[2]];
    farQuad_.push_back(map_rule(rule, a, b, c, t.area));
    maxEdge_.push_back(
        std::max({(a - b).norm(), (b - c).norm(), (c - a).norm()}));
  }
}

bool EfieKernel::triangles_touch(int ta, int tb) const {
  const auto& va = mesh_.triangles[ta].v;
  const auto& vb = mesh_.triangles[tb].v;
  for (int i : va)
    for (int j : vb)
      if (i == j) return true;
  return false;
}

cplx EfieKernel::pair_term_raw(int m, int n, int ta, int tb) const {
  const RwgBasis& em = mesh_.edges[m];
  const RwgBasis& en = mesh_.edges[n];
  const Triangle& Ta = mesh_.triangles[ta];
  const Triangle& Tb = mesh_.triangles[tb];

  double sm = (ta == em.plusTri) ? 1.0 : -1.0;
  double sn = (tb == en.plusTri) ? 1.0 : -1.0;
  const Vec3& vm = mesh_.vertices[sm > 0 ? em.freeVtxPlus : em.freeVtxMinus];
  const Vec3& vn = mesh_.vertices[sn > 0 ? en.freeVtxPlus : en.freeVtxMinus];

  double cm = sm * em.edgeLength / (2.0 * Ta.area);
  double cn = sn * en.edgeLength / (2.0 * Tb.area);
  double divm = sm * em.edgeLength / Ta.area;
  double divn = sn * en.edgeLength / Tb.area;

  const double k = physics_.wavenumber();
  const cplx vecCoef = kJ * physics_.omega() * physics_.mu() * cm * cn;
  const cplx divCoef = divm * divn / (kJ * physics_.omega() * physics_.epsilon());

  bool touching = (ta == tb) || triangles_touch(ta, tb);
  double dist = (Ta.centroid - Tb.centroid).norm();
  bool nearPair =
      touching || dist < quad_.nearFactor * std::max(maxEdge_[ta], maxEdge_[tb]);

  if (!nearPair) {
    const TriQuadPoints& qa = farQuad_[ta];
    const TriQuadPoints& qb = farQuad_[tb];
    cplx acc = 0.0;
    for (size_t p = 0; p < qa.point.size(); ++p) {
      const Vec3 rhoM = qa.point[p] - vm;
      for (size_t q = 0; q < qb.point.size(); ++q) {
        double R = (qa.point[p] - qb.point[q]).norm();
        cplx bracket = vecCoef * rhoM.dot(qb.point[q] - vn) + divCoef;
        acc += (qa.weight[p] * qb.weight[q]) * green(k, R) * bracket;
      }
    }
    return acc;
  }

  // Near pair: analytic static part over the source triangle, smooth
  // remainder by quadrature, outer integral by quadrature.
  const Vec3 &b0 = mesh_.vertices[Tb.v[0]], &b1 = mesh_.vertices[Tb.v[1]],
             &b2 = mesh_.vertices[Tb.v[2]];
  const auto& outerRule =
      tri_quad_rule(touching ? quad_.selfOuterDegree : quad_.nearDegree);
  const auto& innerRule = tri_quad_rule(quad_.nearDegree);
  TriQuadPoints outer = map_rule(outerRule, mesh_.vertices[Ta.v[0]],
                                 mesh_.vertices[Ta.v[1]],
                                 mesh_.vertices[Ta.v[2]], Ta.area);
  TriQuadPoints inner = map_rule(innerRule, b0, b1, b2, Tb.area);

  cplx acc = 0.0;
  for (size_t p = 0; p < outer.point.size(); ++p) {
    const Vec3& rp = outer.point[p];
    // Smooth remainder, numerically.
    cplx Isca = 0.0;
    Eigen::Vector3cd Ivec = Eigen::Vector3cd::Zero();
    for (size_t q = 0; q < inner.point.size(); ++q) {
      double R = (rp - inner.point[q]).norm();
      cplx g = green_smooth(k, R) * inner.weight[q];
      Isca += g;
      Ivec += g * (inner.point[q] - vn);
    }
    // Static 1/(4 pi R) part, analytically.
    StaticPotentials sp = static_potentials(rp, b0, b1, b2);
    double inv4pi = 1.0 / (4.0 * kPi);
    Isca += inv4pi * sp.scalar;
    Ivec += inv4pi * (sp.inPlane + (sp.proj - vn) * sp.scalar);

    Eigen::Vector3cd rhoM = (rp - vm).cast<cplx>();
    acc += outer.weight[p] * (vecCoef * rhoM.dot(Ivec) + divCoef * Isca);
  }
  return acc;
}

cplx EfieKernel::z_triangle_pair_contribution(int m, int n, int ta,
                                              int tb) const {
  const RwgBasis& em = mesh_.edges[m];
  const RwgBasis& en = mesh_.edges[n];
  if (ta != em.plusTri && ta != em.minusTri)
    throw std::invalid_argument("triangle " + std::to_string(ta) +
                                " not in support of edge " + std::to_string(m));
  if (tb != en.plusTri && tb != en.minusTri)
    throw std::invalid_argument("triangle " + std::to_string(tb) +
                                " not in support of edge " + std::to_string(n));
  // Canonical orientation keeps the decomposition consistent with z_entry.
  if (n < m) return pair_term_raw(n, m, tb, ta);
  return pair_term_raw(m, n, ta, tb);
}

cplx EfieKernel::z_entry(int m, int n) const {
  int a = std::min(m, n), b = std::max(m, n);
  const RwgBasis& ea = mesh_.edges[a];
  const RwgBasis& eb = mesh_.edges[b];
  cplx z = 0.0;
  for (int ta : {ea.plusTri, ea.minusTri})
    for (int tb : {eb.plusTri, eb.minusTri}) z += pair_term_raw(a, b, ta, tb);
  return z;
}

ComplexDenseBlock EfieKernel::fill_block(const std::vector<int>& rowEdgeIds,
                                         const std::vector<int>& colEdgeIds) const {
  if (rowEdgeIds.empty() || colEdgeIds.empty())
    throw std::invalid_argument("fill_block: empty index list");
  ComplexDenseBlock block;
  block.rowEdgeIds = rowEdgeIds;
  block.colEdgeIds = colEdgeIds;
  block.entries.resize(static_cast<Eigen::Index>(rowEdgeIds.size()),
                       static_cast<Eigen::Index>(colEdgeIds.size()));
  const int rows = static_cast<int>(rowEdgeIds.size());
  const int cols = static_cast<int>(colEdgeIds.size());
#pragma omp parallel for schedule(dynamic, 8) if (rows * cols > 4096)
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      block.entries(i, j) = z_entry(rowEdgeIds[i], colEdgeIds[j]);
  return block;
}

CMat EfieKernel::fill_dense() const {
  const int n = size();
  CMat Z(n, n);
#pragma omp parallel for schedule(dynamic, 4)
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      cplx z = z_entry(i, j);
      Z(i, j) = z;
      Z(j, i) = z;
    }
  }
  return Z;
}

CVec EfieKernel::excitation(const PlaneWave& wave) const {
  const Vec3 khat = wave.propagation();
  const Vec3 pol = wave.polarizationVector();
  const double k = physics_.wavenumber();
  CVec b = CVec::Zero(size());
  for (int m = 0; m < size(); ++m) {
    const RwgBasis& em = mesh_.edges[m];
    cplx acc = 0.0;
    for (int ta : {em.plusTri, em.minusTri}) {
      double s = (ta == em.plusTri) ? 1.0 : -1.0;
      const Vec3& vfree =
          mesh_.vertices[s > 0 ? em.freeVtxPlus : em.freeVtxMinus];
      double c = s * em.edgeLength / (2.0 * mesh_.triangles[ta].area);
      const TriQuadPoints& q = farQuad_[ta];
      for (size_t p = 0; p < q.point.size(); ++p) {
        double phase = -k * khat.dot(q.point[p]);
        cplx expfac(std::cos(phase), std::sin(phase));
        acc += q.weight[p] * c * pol.dot(q.point[p] - vfree) * expfac;
      }
    }
    b[m] = wave.amplitude * acc;
  }
  return b;
}

}  // namespace hmom
