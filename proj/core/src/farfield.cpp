#include "hmom/farfield.hpp"

#include <cmath>
#include <stdexcept>

#include "hmom/quadrature.hpp"

namespace hmom {

FarFieldResult scattered_farfield(
    const SurfaceMesh& mesh, const PhysicsParams& physics,
    const CVec& currentCoefficients,
    const std::vector<std::pair<double, double>>& angles,
    Polarization receivePol, double incidentAmplitude, int quadDegree) {
  if (currentCoefficients.size() != mesh.num_unknowns())
    throw std::invalid_argument("coefficient vector length mismatch");
  const double k = physics.wavenumber();
  const cplx amp = -kJ * physics.omega() * physics.mu() / (4.0 * kPi);

  // Current density at the quadrature points of every triangle.
  const auto& rule = tri_quad_rule(quadDegree);
  auto triEdges = mesh.triangle_edges();
  std::vector<TriQuadPoints> quad(mesh.triangles.size());
  std::vector<std::vector<Eigen::Vector3cd>> J(mesh.triangles.size());
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const Triangle& tri = mesh.triangles[t];
    quad[t] = map_rule(rule, mesh.vertices[tri.v[0]], mesh.vertices[tri.v[1]],
                       mesh.vertices[tri.v[2]], tri.area);
    J[t].assign(quad[t].point.size(), Eigen::Vector3cd::Zero());
    for (int e : triEdges[t]) {
      const RwgBasis& basis = mesh.edges[e];
      double s = (t == basis.plusTri) ? 1.0 : -1.0;
      const Vec3& vfree =
          mesh.vertices[s > 0 ? basis.freeVtxPlus : basis.freeVtxMinus];
      double c = s * basis.edgeLength / (2.0 * tri.area);
      for (size_t p = 0; p < quad[t].point.size(); ++p)
        J[t][p] += currentCoefficients[e] * c *
                   (quad[t].point[p] - vfree).cast<cplx>();
    }
  }

  FarFieldResult out;
  out.angles = angles;
  out.polarization = receivePol;
  out.rcsDbsm.resize(angles.size());

#pragma omp parallel for schedule(static)
  for (int a = 0; a < static_cast<int>(angles.size()); ++a) {
    auto [theta, phi] = angles[a];
    Vec3 rhat = spherical_dir(theta, phi);
    Eigen::Vector3cd F = Eigen::Vector3cd::Zero();
    for (int t = 0; t < mesh.num_triangles(); ++t) {
      for (size_t p = 0; p < quad[t].point.size(); ++p) {
        double phase = k * rhat.dot(quad[t].point[p]);
        cplx e(std::cos(phase), std::sin(phase));
        F += quad[t].weight[p] * e * J[t][p];
      }
    }
    F *= amp;
    Vec3 pol = receivePol == Polarization::VV ? spherical_theta_hat(theta, phi)
                                              : spherical_phi_hat(theta, phi);
    cplx Fp = pol.cast<cplx>().dot(F);
    double sigma = 4.0 * kPi * std::norm(Fp) /
                   (incidentAmplitude * incidentAmplitude);
    double db = sigma > 0.0 ? 10.0 * std::log10(sigma) : kRcsFloorDbsm;
    out.rcsDbsm[a] = std::max(db, kRcsFloorDbsm);
  }
  return out;
}

RcsComparison rcs_compare(const FarFieldResult& solver,
                          const FarFieldResult& reference, double nullGuardDb) {
  if (solver.angles.size() != reference.angles.size())
    throw std::invalid_argument("rcs_compare: angle grid size mismatch");
  for (size_t i = 0; i < solver.angles.size(); ++i)
    if (std::abs(solver.angles[i].first - reference.angles[i].first) > 1e-12 ||
        std::abs(solver.angles[i].second - reference.angles[i].second) > 1e-12)
      throw std::invalid_argument("rcs_compare: angle grids differ");

  const auto& ref = reference.rcsDbsm;
  const size_t n = ref.size();
  std::vector<char> excluded(n, 0);
  for (size_t i = 0; i < n; ++i) {
    bool leftHigher = (i == 0) || ref[i - 1] > ref[i];
    bool rightHigher = (i + 1 == n) || ref[i + 1] >= ref[i];
    bool interiorMin = i > 0 && i + 1 < n && leftHigher && rightHigher;
    if (!interiorMin) continue;
    // Grow the guard band around the local minimum.
    double lim = ref[i] + nullGuardDb;
    excluded[i] = 1;
    for (size_t l = i; l-- > 0 && ref[l] <= lim;) excluded[l] = 1;
    for (size_t r = i + 1; r < n && ref[r] <= lim; ++r) excluded[r] = 1;
  }

  RcsComparison cmp;
  double sumSq = 0.0;
  for (size_t i = 0; i < n; ++i) {
    if (excluded[i]) {
      ++cmp.samplesExcluded;
      continue;
    }
    double d = solver.rcsDbsm[i] - ref[i];
    sumSq += d * d;
    cmp.maxDb = std::max(cmp.maxDb, std::abs(d));
    ++cmp.samplesUsed;
  }
  cmp.rmsDb = cmp.samplesUsed > 0 ? std::sqrt(sumSq / cmp.samplesUsed) : 0.0;
  return cmp;
}

std::vector<std::pair<double, double>> theta_sweep(double thetaStartDeg,
                                                   double thetaEndDeg,
                                                   int samples, double phiDeg) {
  std::vector<std::pair<double, double>> angles;
  angles.reserve(samples);
  double phi = phiDeg * kPi / 180.0;
  for (int i = 0; i < samples; ++i) {
    double t = samples == 1 ? thetaStartDeg
                            : thetaStartDeg + (thetaEndDeg - thetaStartDeg) *
                                                  i / (samples - 1);
    angles.emplace_back(t * kPi / 180.0, phi);
  }
  return angles;
}

}  // namespace hmom
