#include "hmom/singular.hpp"

#include <cmath>

namespace hmom {

StaticPotentials static_potentials(const Vec3& obs, const Vec3& q0,
                                   const Vec3& q1, const Vec3& q2) {
  StaticPotentials out;
  Vec3 normal = (q1 - q0).cross(q2 - q0);
  double scale = std::sqrt(normal.norm());  // ~ edge length
  normal.normalize();

  double d = (obs - q0).dot(normal);  // signed height above the plane
  double absd = std::abs(d);
  out.proj = obs - d * normal;

  const Vec3 corner[3] = {q0, q1, q2};
  for (int i = 0; i < 3; ++i) {
    const Vec3& a = corner[i];
    const Vec3& b = corner[(i + 1) % 3];
    Vec3 edge = b - a;
    double len = edge.norm();
    if (len <= 0.0) continue;
    Vec3 lHat = edge / len;
    Vec3 uHat = lHat.cross(normal);  // outward in-plane edge normal

    Vec3 rhoA = a - out.proj;
    Vec3 rhoB = b - out.proj;
    double p0 = rhoA.dot(uHat);  // signed distance from proj to the edge line
    double lMinus = rhoA.dot(lHat);
    double lPlus = rhoB.dot(lHat);
    double rMinus = (obs - a).norm();
    double rPlus = (obs - b).norm();
    double r0sq = p0 * p0 + d * d;

    double tiny = 1e-14 * scale * scale;
    double logTerm;
    double denom = rMinus + lMinus;
    if (denom > 1e-14 * scale) {
      logTerm = std::log((rPlus + lPlus) / denom);
    } else if (r0sq > tiny * tiny) {
      // (R+l)(R-l) = R0^2: stable when the observation point lies beyond
      // the edge start on its line.
      logTerm = std::log((rPlus + lPlus) * (rMinus - lMinus) / r0sq);
    } else {
      logTerm = 0.0;  // observation on the edge line; the factors vanish
    }

    double scalarEdge = p0 * logTerm;
    if (absd > 0.0) {
      double atanPlus =
          std::atan2(p0 * lPlus, r0sq + absd * rPlus);
      double atanMinus =
          std::atan2(p0 * lMinus, r0sq + absd * rMinus);
      scalarEdge -= absd * (atanPlus - atanMinus);
    }
    out.scalar += scalarEdge;
    out.inPlane += uHat * 0.5 * (r0sq * logTerm + lPlus * rPlus - lMinus * rMinus);
  }
  return out;
}

}  // namespace hmom
