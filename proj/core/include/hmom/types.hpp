#pragma once

#include <complex>
#include <cstdint>
#include <limits>

#include <Eigen/Core>
#include <Eigen/Dense>

namespace hmom {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kJ{0.0, 1.0};

/// Axis-aligned bounding box.
struct Box {
  Vec3 lo{Vec3::Constant(std::numeric_limits<double>::max())};
  Vec3 hi{Vec3::Constant(std::numeric_limits<double>::lowest())};

  void expand(const Vec3& p) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  void expand(const Box& b) {
    lo = lo.cwiseMin(b.lo);
    hi = hi.cwiseMax(b.hi);
  }
  bool empty() const { return (hi.array() < lo.array()).any(); }
  Vec3 center() const { return 0.5 * (lo + hi); }
  Vec3 extent() const { return hi - lo; }
  double diameter() const { return empty() ? 0.0 : extent().norm(); }
};

/// Minimum point-set distance between two axis-aligned boxes (zero when
/// they touch or overlap).
inline double box_distance(const Box& a, const Box& b) {
  Vec3 gap = Vec3::Zero();
  for (int i = 0; i < 3; ++i) {
    double g = std::max(a.lo[i] - b.hi[i], b.lo[i] - a.hi[i]);
    gap[i] = std::max(0.0, g);
  }
  return gap.norm();
}

}  // namespace hmom
