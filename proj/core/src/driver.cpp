#include "hmom/driver.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hmom/farfield.hpp"

namespace hmom {

namespace {

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

void apply_thread_cap(int threads) {
  int cap = threads;
  if (cap <= 0) {
    if (const char* env = std::getenv("HMOM_THREADS")) cap = std::atoi(env);
  }
#ifdef _OPENMP
  if (cap > 0) omp_set_num_threads(cap);
#else
  (void)cap;
#endif
}

std::unique_ptr<Workspace> prepare_workspace(const RunConfig& config) {
  apply_thread_cap(config.threads);
  auto ws = std::make_unique<Workspace>();
  ws->physics = PhysicsParams::for_wavelength(config.wavelength);

  SurfaceMesh raw;
  switch (config.geometry) {
    case RunConfig::Geometry::plate:
      raw = mesh_plate(config.plateX, config.plateY, config.meshH);
      break;
    case RunConfig::Geometry::sphere:
      raw = mesh_sphere(config.sphereRadius, config.meshH);
      break;
    case RunConfig::Geometry::file:
      raw = load_mesh(config.meshPath, config.meshFormat);
      break;
  }
  if (raw.num_unknowns() == 0)
    throw std::runtime_error("geometry has no interior edges (no unknowns)");

  auto [ordered, tree] = build_clustered_mesh(raw, config.leafSize);
  ws->mesh = std::move(ordered);
  // The tree references triangle ranges only, so rebuilding against the
  // stored mesh keeps everything self-contained.
  ws->tree = ClusterTree::build(ws->mesh, config.leafSize);
  ws->blockLevel = config.blockLevel >= 0
                       ? config.blockLevel
                       : block_level_for(ws->mesh.num_triangles());
  ws->kernel =
      std::make_unique<EfieKernel>(ws->mesh, ws->physics, config.quadrature);
  return ws;
}

PrecondArtifacts build_preconditioner(const Workspace& ws,
                                      const PrecondConfig& config,
                                      PrecondVariant variant) {
  PrecondArtifacts art;
  double t0 = now_seconds();
  if (variant == PrecondVariant::triTridiagonal) {
    art.P = build_tridiagonal(*ws.kernel, config.entryMode);
  } else {
    art.P = build_block_tridiagonal(*ws.kernel, ws.tree, config.entryMode,
                                    ws.blockLevel);
  }
  art.buildSeconds = now_seconds() - t0;
  art.memoryBefore = memory_report(art.P);

  t0 = now_seconds();
  art.factorization = SparseLu::factorize(art.P, config.pivotThreshold);
  art.factorSeconds = now_seconds() - t0;
  art.memoryAfter = memory_report(*art.factorization);
  return art;
}

GmresReport solve_system(const HMatrix& H, const SparseLu* precond,
                         const CVec& rhs, const GmresConfig& config) {
  MatVec op = [&H](const CVec& x) { return H.matvec(x); };
  MatVec M;
  if (precond) M = [precond](const CVec& x) { return precond->apply(x); };
  return gmres(op, M, rhs, config);
}

IterationExperiment iteration_experiment(const Workspace& ws, const HMatrix& H,
                                         const RunConfig& config) {
  CVec b = ws.kernel->excitation(config.wave);

  IterationExperiment ex;
  ex.unpreconditionedReport = solve_system(H, nullptr, b, config.gmres);
  ex.unpreconditioned = ex.unpreconditionedReport.iterations;

  PrecondConfig pc = config.precond;
  pc.variant = PrecondVariant::triTridiagonal;
  pc.entryMode = EntryMode::partialPair;
  auto tri = build_preconditioner(ws, pc, PrecondVariant::triTridiagonal);
  ex.triReport = solve_system(H, &*tri.factorization, b, config.gmres);
  ex.triTridiagonal = ex.triReport.iterations;

  pc.variant = PrecondVariant::blockTridiagonal;
  pc.entryMode = EntryMode::fullEntry;
  auto blk = build_preconditioner(ws, pc, PrecondVariant::blockTridiagonal);
  ex.blockReport = solve_system(H, &*blk.factorization, b, config.gmres);
  ex.blockTridiagonal = ex.blockReport.iterations;

  ex.allConverged = ex.unpreconditionedReport.converged &&
                    ex.triReport.converged && ex.blockReport.converged;
  return ex;
}

std::string residuals_csv(const GmresReport& report) {
  std::ostringstream out;
  out << "iteration,relativeResidual\n";
  for (size_t i = 0; i < report.residualHistory.size(); ++i)
    out << i + 1 << "," << report.residualHistory[i] << "\n";
  return out.str();
}

std::string spectrum_csv(const CVec& eigenvalues) {
  std::ostringstream out;
  out << "re,im\n";
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
    out << eigenvalues[i].real() << "," << eigenvalues[i].imag() << "\n";
  return out.str();
}

std::string rcs_csv(const FarFieldResult& result) {
  std::ostringstream out;
  out << "thetaDeg,phiDeg,rcsDbsm\n";
  for (size_t i = 0; i < result.angles.size(); ++i)
    out << result.angles[i].first * 180.0 / kPi << ","
        << result.angles[i].second * 180.0 / kPi << "," << result.rcsDbsm[i]
        << "\n";
  return out.str();
}

}  // namespace hmom
