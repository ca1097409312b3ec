#include "hmom/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace hmom {

namespace {

TriQuadRule symmetric_rule(int degree) {
  TriQuadRule r;
  auto push1 = [&](double w) { r.push_back({w, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}); };
  auto push3 = [&](double w, double a) {
    double b = 1.0 - 2.0 * a;
    r.push_back({w, b, a, a});
    r.push_back({w, a, b, a});
    r.push_back({w, a, a, b});
  };
  switch (degree) {
    case 1:
      push1(1.0);
      break;
    case 2:
      push3(1.0 / 3.0, 1.0 / 6.0);
      break;
    case 3:
      push1(-27.0 / 48.0);
      push3(25.0 / 48.0, 0.2);
      break;
    case 5:
      push1(0.225);
      push3(0.13239415278850619, 0.47014206410511505);
      push3(0.12593918054482713, 0.10128650732345633);
      break;
    default:
      break;
  }
  return r;
}

// Gauss-Legendre nodes/weights on [0,1] by Newton iteration on P_n.
void gauss_legendre_01(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double p0, p1, dp;
    for (int it = 0; it < 100; ++it) {
      p0 = 1.0;
      p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = 0.5 * (1.0 + t);
    w[i] = 1.0 / ((1.0 - t * t) * dp * dp);
  }
}

// Collapsed square-to-triangle rule: (u, v) in [0,1]^2 maps to barycentric
// (1-u, u*(1-v), u*v) with Jacobian u. Exact for total degree p when the
// 1D rule integrates degree p+1.
TriQuadRule collapsed_rule(int degree) {
  int n = (degree + 3) / 2 + 1;
  std::vector<double> x, w;
  gauss_legendre_01(n, x, w);
  TriQuadRule r;
  r.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double u = x[i], v = x[j];
      double ww = w[i] * w[j] * u * 2.0;  // reference triangle area 1/2
      r.push_back({ww, 1.0 - u, u * (1.0 - v), u * v});
    }
  }
  return r;
}

}  // namespace

const TriQuadRule& tri_quad_rule(int degree) {
  static std::map<int, TriQuadRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;
  TriQuadRule r = symmetric_rule(degree);
  if (r.empty()) r = collapsed_rule(degree);
  return cache.emplace(degree, std::move(r)).first->second;
}

TriQuadPoints map_rule(const TriQuadRule& rule, const Vec3& v0, const Vec3& v1,
                       const Vec3& v2, double area) {
  TriQuadPoints q;
  q.point.reserve(rule.size());
  q.weight.reserve(rule.size());
  for (const auto& n : rule) {
    q.point.push_back(n.b0 * v0 + n.b1 * v1 + n.b2 * v2);
    q.weight.push_back(n.w * area);
  }
  return q;
}

}  // namespace hmom
