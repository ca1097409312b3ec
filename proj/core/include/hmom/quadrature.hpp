#pragma once

#include <vector>

#include "hmom/types.hpp"

namespace hmom {

/// One quadrature node in barycentric coordinates. Weights are normalized
/// so that sum(w) = 1; integrals are scaled by the triangle area.
struct TriQuadNode {
  double w;
  double b0, b1, b2;
};

using TriQuadRule = std::vector<TriQuadNode>;

/// Rule exact for polynomials up to the given total degree. Degrees 1, 2,
/// 3 and 5 use the standard symmetric Gauss rules (1/3/4/7 points); other
/// degrees fall back to a collapsed tensor-product Gauss rule.
const TriQuadRule& tri_quad_rule(int degree);

/// Physical quadrature points for one triangle, cached by the EFIE kernel.
struct TriQuadPoints {
  std::vector<Vec3> point;
  std::vector<double> weight;  // already scaled by triangle area
};

TriQuadPoints map_rule(const TriQuadRule& rule, const Vec3& v0, const Vec3& v1,
                       const Vec3& v2, double area);

}  // namespace hmom
