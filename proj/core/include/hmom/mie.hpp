#pragma once

#include "hmom/farfield.hpp"
#include "hmom/physics.hpp"

namespace hmom {

struct MieConfig {
  double radius = 0.0;     // meters
  double frequency = 0.0;  // Hz
  int maxOrder = 0;        // 0: automatic (>= ka + 15)

  double ka() const {
    return 2.0 * kPi * frequency / 299792458.0 * radius;
  }
  int effective_order() const;
};

/// Exact PEC-sphere bistatic RCS from the Mie series, for a plane wave
/// arriving from theta = 0 (the solver's incidence convention). Angles are
/// observation (theta, phi).
FarFieldResult mie_rcs(const MieConfig& config,
                       const std::vector<std::pair<double, double>>& angles,
                       Polarization polarization);

struct MieCrossSections {
  double scattering = 0.0;  // m^2
  double extinction = 0.0;  // m^2
};

MieCrossSections mie_cross_sections(const MieConfig& config);

}  // namespace hmom
