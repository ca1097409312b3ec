#pragma once

#include "hmom/types.hpp"

namespace hmom {

/// Closed-form static potential integrals over a flat triangle
/// (Wilton/Rao-style edge decomposition):
///   scalar = integral of 1/R dS'
///   inPlane = integral of (r' - proj)/R dS'
/// where proj is the projection of the observation point onto the triangle
/// plane. Valid for observation points anywhere, including on the triangle.
struct StaticPotentials {
  double scalar = 0.0;
  Vec3 inPlane = Vec3::Zero();
  Vec3 proj = Vec3::Zero();
};

StaticPotentials static_potentials(const Vec3& obs, const Vec3& q0,
                                   const Vec3& q1, const Vec3& q2);

}  // namespace hmom
