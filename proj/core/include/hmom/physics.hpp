#pragma once

#include <stdexcept>

#include "hmom/types.hpp"

namespace hmom {

struct PhysicsParams {
  double frequency = 0.0;      // Hz
  double speedOfLight = 299792458.0;
  double waveImpedance = 376.730313668;  // ohms

  double wavelength() const { return speedOfLight / frequency; }
  double wavenumber() const { return 2.0 * kPi * frequency / speedOfLight; }
  double omega() const { return 2.0 * kPi * frequency; }
  double mu() const { return waveImpedance / speedOfLight; }
  double epsilon() const { return 1.0 / (waveImpedance * speedOfLight); }

  static PhysicsParams for_frequency(double hz) {
    if (hz <= 0) throw std::invalid_argument("frequency must be positive");
    PhysicsParams p;
    p.frequency = hz;
    return p;
  }
  static PhysicsParams for_wavelength(double meters) {
    if (meters <= 0) throw std::invalid_argument("wavelength must be positive");
    PhysicsParams p;
    p.frequency = p.speedOfLight / meters;
    return p;
  }
};

enum class Polarization { VV, HH };

/// Plane wave arriving from direction (theta, phi); propagation is toward
/// the origin. V polarization lies along the spherical theta unit vector.
struct PlaneWave {
  double incidentTheta = 0.0;  // radians, [0, pi]
  double incidentPhi = 0.0;    // radians, [0, 2pi)
  Polarization polarization = Polarization::VV;
  double amplitude = 1.0;  // V/m

  Vec3 propagation() const {
    return -Vec3(std::sin(incidentTheta) * std::cos(incidentPhi),
                 std::sin(incidentTheta) * std::sin(incidentPhi),
                 std::cos(incidentTheta));
  }
  Vec3 polarizationVector() const {
    Vec3 thetaHat(std::cos(incidentTheta) * std::cos(incidentPhi),
                  std::cos(incidentTheta) * std::sin(incidentPhi),
                  -std::sin(incidentTheta));
    Vec3 phiHat(-std::sin(incidentPhi), std::cos(incidentPhi), 0.0);
    return polarization == Polarization::VV ? thetaHat : phiHat;
  }
};

inline Vec3 spherical_dir(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

inline Vec3 spherical_theta_hat(double theta, double phi) {
  return {std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi),
          -std::sin(theta)};
}

inline Vec3 spherical_phi_hat(double /*theta*/, double phi) {
  return {-std::sin(phi), std::cos(phi), 0.0};
}

}  // namespace hmom
