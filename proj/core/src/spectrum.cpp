#include "hmom/spectrum.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace hmom {

double SpectrumReport::clusterFraction(double radius) const {
  if (eigenvalues.size() == 0) return 0.0;
  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
    if (std::abs(eigenvalues[i] - cplx(1.0)) <= radius) ++count;
  return static_cast<double>(count) / static_cast<double>(eigenvalues.size());
}

SpectrumReport dense_spectrum(const CMat& Z, const SparseLu* precond,
                              int denseCap) {
  if (Z.rows() != Z.cols()) throw std::invalid_argument("matrix not square");
  if (Z.rows() > denseCap)
    throw std::invalid_argument("dense spectrum refused: N = " +
                                std::to_string(Z.rows()) + " exceeds cap " +
                                std::to_string(denseCap));
  CMat A;
  if (precond) {
    A.resize(Z.rows(), Z.cols());
    for (Eigen::Index j = 0; j < Z.cols(); ++j) A.col(j) = precond->apply(Z.col(j));
  } else {
    A = Z;
  }
  Eigen::ComplexEigenSolver<CMat> solver(A, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");

  SpectrumReport rep;
  rep.eigenvalues = solver.eigenvalues();
  double lo = std::numeric_limits<double>::max(), hi = 0.0;
  for (Eigen::Index i = 0; i < rep.eigenvalues.size(); ++i) {
    double a = std::abs(rep.eigenvalues[i]);
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  rep.conditionEstimate = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  return rep;
}

}  // namespace hmom
