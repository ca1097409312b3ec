#include "hmom/gmres.hpp"

#include <cmath>
#include <stdexcept>

namespace hmom {

namespace {

void apply_rotation(cplx& dx, cplx& dy, const cplx& cs, const cplx& sn) {
  cplx t = cs * dx + sn * dy;
  dy = -std::conj(sn) * dx + cs * dy;
  dx = t;
}

void make_rotation(const cplx& dx, const cplx& dy, cplx& cs, cplx& sn) {
  double normDx = std::abs(dx), normDy = std::abs(dy);
  if (normDy == 0.0) {
    cs = 1.0;
    sn = 0.0;
  } else if (normDx == 0.0) {
    cs = 0.0;
    sn = dy != cplx(0.0) ? cplx(std::conj(dy) / normDy) : cplx(1.0);
  } else {
    double denom = std::hypot(normDx, normDy);
    cs = normDx / denom;
    sn = (dx / normDx) * cplx(std::conj(dy)) / denom;
  }
}

}  // namespace

GmresReport gmres(const MatVec& op, const MatVec& precond, const CVec& b,
                  const GmresConfig& config) {
  if (config.restart < 1) throw std::invalid_argument("restart must be >= 1");
  if (config.tol <= 0.0 || config.tol >= 1.0)
    throw std::invalid_argument("tol must be in (0, 1)");
  const auto n = b.size();
  const bool haveM = static_cast<bool>(precond);
  const bool leftSide = config.side == PrecondSide::left;

  // Operator for the Krylov process and the monitored right-hand side.
  auto kryOp = [&](const CVec& v) -> CVec {
    if (!haveM) return op(v);
    return leftSide ? CVec(precond(op(v))) : CVec(op(precond(v)));
  };
  CVec rhs = (haveM && leftSide) ? precond(b) : b;

  GmresReport rep;
  rep.restartLength = config.restart;
  const double rhsNorm = rhs.norm();
  if (rhsNorm == 0.0) {
    rep.solution = CVec::Zero(n);
    rep.converged = true;
    rep.trueResidual = 0.0;
    return rep;
  }

  const int m = config.restart;
  CVec xk = CVec::Zero(n);  // krylov-side solution (xt in right mode)
  std::vector<CVec> V(m + 1);
  CMat H = CMat::Zero(m + 1, m);
  CVec g(m + 1), cs(m), sn(m);

  int totalIters = 0;
  bool done = false;
  while (!done && totalIters < config.maxIters) {
    CVec r = rhs - kryOp(xk);
    if (r.size() != n) throw std::invalid_argument("operator dimension mismatch");
    double beta = r.norm();
    if (beta / rhsNorm <= config.tol && totalIters > 0) break;
    if (!std::isfinite(beta)) {
      rep.breakdown = "non-finite residual norm";
      break;
    }
    if (beta == 0.0) break;
    V[0] = r / beta;
    g.setZero();
    g[0] = beta;

    int j = 0;
    for (; j < m && totalIters < config.maxIters; ++j) {
      CVec w = kryOp(V[j]);
      double preNorm = w.norm();
      for (int i = 0; i <= j; ++i) {
        cplx hij = V[i].dot(w);
        H(i, j) = hij;
        w -= hij * V[i];
      }
      // Selective reorthogonalization: one extra MGS pass when the
      // projection removed most of w.
      if (w.norm() < preNorm / std::sqrt(2.0)) {
        for (int i = 0; i <= j; ++i) {
          cplx corr = V[i].dot(w);
          H(i, j) += corr;
          w -= corr * V[i];
        }
      }
      double hNext = w.norm();
      H(j + 1, j) = hNext;
      bool happy = hNext <= 1e-14 * std::abs(H(j, j) == cplx(0.0) ? cplx(beta) : H(j, j));
      if (!std::isfinite(hNext)) {
        rep.breakdown = "Arnoldi norm underflow/overflow at iteration " +
                        std::to_string(totalIters + 1);
        break;
      }
      if (!happy && hNext > 0.0) V[j + 1] = w / hNext;

      for (int i = 0; i < j; ++i) apply_rotation(H(i, j), H(i + 1, j), cs[i], sn[i]);
      make_rotation(H(j, j), H(j + 1, j), cs[j], sn[j]);
      apply_rotation(H(j, j), H(j + 1, j), cs[j], sn[j]);
      g[j + 1] = 0.0;
      apply_rotation(g[j], g[j + 1], cs[j], sn[j]);

      ++totalIters;
      double rel = std::abs(g[j + 1]) / rhsNorm;
      rep.residualHistory.push_back(rel);
      if (rel <= config.tol || happy) {
        ++j;
        done = true;
        break;
      }
    }

    // Update the solution from the least-squares coefficients.
    if (j > 0) {
      CVec y(j);
      for (int i = j - 1; i >= 0; --i) {
        cplx acc = g[i];
        for (int k = i + 1; k < j; ++k) acc -= H(i, k) * y[k];
        y[i] = acc / H(i, i);
      }
      for (int i = 0; i < j; ++i) xk += y[i] * V[i];
    }
    if (!rep.breakdown.empty()) break;
    ++rep.restartsUsed;
  }

  rep.iterations = totalIters;
  rep.finalResidual = (rhs - kryOp(xk)).norm() / rhsNorm;
  rep.converged = rep.breakdown.empty() && rep.finalResidual <= config.tol;
  rep.solution = (haveM && !leftSide) ? CVec(precond(xk)) : xk;
  rep.trueResidual = (b - op(rep.solution)).norm() / b.norm();
  return rep;
}

}  // namespace hmom
