#pragma once

#include <utility>
#include <vector>

#include "hmom/mesh.hpp"
#include "hmom/physics.hpp"
#include "hmom/types.hpp"

namespace hmom {

struct FarFieldResult {
  std::vector<std::pair<double, double>> angles;  // (theta, phi) radians
  std::vector<double> rcsDbsm;
  Polarization polarization = Polarization::VV;
};

inline constexpr double kRcsFloorDbsm = -120.0;

/// Far-zone scattered field of the RWG current, projected on the receive
/// polarization; sigma = 4 pi |F_pol|^2 / |E0|^2, in dBsm with a -120 dB
/// floor.
FarFieldResult scattered_farfield(
    const SurfaceMesh& mesh, const PhysicsParams& physics,
    const CVec& currentCoefficients,
    const std::vector<std::pair<double, double>>& angles,
    Polarization receivePol = Polarization::VV, double incidentAmplitude = 1.0,
    int quadDegree = 5);

struct RcsComparison {
  double rmsDb = 0.0;
  double maxDb = 0.0;
  int samplesUsed = 0;
  int samplesExcluded = 0;
};

/// Error metrics over main lobes: samples of the reference within
/// nullGuardDb of a local minimum are excluded.
RcsComparison rcs_compare(const FarFieldResult& solver,
                          const FarFieldResult& reference,
                          double nullGuardDb = 3.0);

/// Uniform theta sweep at fixed phi, in radians.
std::vector<std::pair<double, double>> theta_sweep(double thetaStartDeg,
                                                   double thetaEndDeg,
                                                   int samples, double phiDeg);

}  // namespace hmom
