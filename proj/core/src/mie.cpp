#include "hmom/mie.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hmom {

namespace {

// PEC Mie coefficients: a_n from the Riccati-Bessel derivative condition
// (TM), b_n from the value condition (TE). psi_n(x) = x j_n(x),
// xi_n(x) = x (j_n(x) + i y_n(x)).
void mie_coefficients(double x, int order, std::vector<cplx>& a,
                      std::vector<cplx>& b) {
  a.resize(order + 1);
  b.resize(order + 1);
  std::vector<double> jn(order + 2), yn(order + 2);
  for (int n = 0; n <= order + 1; ++n) {
    jn[n] = std::sph_bessel(static_cast<unsigned>(n), x);
    yn[n] = std::sph_neumann(static_cast<unsigned>(n), x);
  }
  for (int n = 1; n <= order; ++n) {
    double psi = x * jn[n];
    double psiPrime = x * jn[n - 1] - n * jn[n];
    cplx h(jn[n], yn[n]);
    cplx hm1(jn[n - 1], yn[n - 1]);
    cplx xi = x * h;
    cplx xiPrime = x * hm1 - static_cast<double>(n) * h;
    a[n] = psiPrime / xiPrime;
    b[n] = psi / xi;
  }
}

// pi_n, tau_n angular functions by upward recurrence in mu = cos(angle).
void angular_functions(double mu, int order, std::vector<double>& pi,
                       std::vector<double>& tau) {
  pi.assign(order + 1, 0.0);
  tau.assign(order + 1, 0.0);
  if (order < 1) return;
  pi[1] = 1.0;
  tau[1] = mu;
  for (int n = 2; n <= order; ++n) {
    pi[n] = ((2.0 * n - 1.0) * mu * pi[n - 1] - n * pi[n - 2]) / (n - 1.0);
    tau[n] = n * mu * pi[n] - (n + 1.0) * pi[n - 1];
  }
}

}  // namespace

int MieConfig::effective_order() const {
  double x = ka();
  int heuristic =
      static_cast<int>(std::ceil(x + 4.05 * std::cbrt(x) + 15.0));
  return maxOrder > 0 ? maxOrder : heuristic;
}

FarFieldResult mie_rcs(const MieConfig& config,
                       const std::vector<std::pair<double, double>>& angles,
                       Polarization polarization) {
  if (config.radius <= 0 || config.frequency <= 0)
    throw std::invalid_argument("MieConfig requires positive radius and frequency");
  const double x = config.ka();
  const int order = config.effective_order();
  const double k = 2.0 * kPi * config.frequency / 299792458.0;

  std::vector<cplx> a, b;
  mie_coefficients(x, order, a, b);

  FarFieldResult out;
  out.angles = angles;
  out.polarization = polarization;
  out.rcsDbsm.resize(angles.size());

  std::vector<double> pi, tau;
  for (size_t i = 0; i < angles.size(); ++i) {
    auto [theta, phi] = angles[i];
    // Scattering angle between the -z propagation direction and the
    // observation direction: cos = -cos(theta).
    double mu = -std::cos(theta);
    angular_functions(mu, order, pi, tau);
    cplx s1 = 0.0, s2 = 0.0;
    for (int n = 1; n <= order; ++n) {
      double c = (2.0 * n + 1.0) / (n * (n + 1.0));
      s1 += c * (a[n] * pi[n] + b[n] * tau[n]);
      s2 += c * (a[n] * tau[n] + b[n] * pi[n]);
    }
    // Incident x-polarized (VV at theta_i = 0, phi_i = 0): the in-plane
    // incident component is cos(phi), the perpendicular one sin(phi).
    double amp2;
    if (polarization == Polarization::VV)
      amp2 = std::norm(s2) * std::cos(phi) * std::cos(phi);
    else
      amp2 = std::norm(s1) * std::cos(phi) * std::cos(phi);
    double sigma = 4.0 * kPi / (k * k) * amp2;
    double db = sigma > 0.0 ? 10.0 * std::log10(sigma) : kRcsFloorDbsm;
    out.rcsDbsm[i] = std::max(db, kRcsFloorDbsm);
  }
  return out;
}

MieCrossSections mie_cross_sections(const MieConfig& config) {
  const double x = config.ka();
  const int order = config.effective_order();
  const double k = 2.0 * kPi * config.frequency / 299792458.0;
  std::vector<cplx> a, b;
  mie_coefficients(x, order, a, b);
  MieCrossSections cs;
  for (int n = 1; n <= order; ++n) {
    double c = 2.0 * kPi / (k * k) * (2.0 * n + 1.0);
    cs.scattering += c * (std::norm(a[n]) + std::norm(b[n]));
    cs.extinction += c * (a[n].real() + b[n].real());
  }
  return cs;
}

}  // namespace hmom
