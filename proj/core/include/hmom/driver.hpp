#pragma once

#include <memory>
#include <optional>
#include <string>

#include "hmom/cluster_tree.hpp"
#include "hmom/efie.hpp"
#include "hmom/gmres.hpp"
#include "hmom/hmatrix.hpp"
#include "hmom/mesh_io.hpp"
#include "hmom/precond.hpp"

namespace hmom {

struct RunConfig {
  enum class Geometry { plate, sphere, file };
  Geometry geometry = Geometry::sphere;
  double plateX = 1.0, plateY = 1.0;  // meters
  double sphereRadius = 1.0;          // meters
  std::string meshPath;
  MeshFormat meshFormat = MeshFormat::rawtri;

  double wavelength = 1.0;  // meters; frequency = c / wavelength
  double meshH = 0.1;       // target edge length, meters
  double eta = 1.0;
  int leafSize = 30;
  int blockLevel = -1;  // -1: choose for ~30 triangles per block
  double compressionTol = 1e-3;
  PrecondConfig precond;
  GmresConfig gmres;
  QuadratureConfig quadrature;
  PlaneWave wave;
  int threads = 0;  // 0: leave the runtime default
};

/// Leaf-ordered mesh, cluster tree and kernel for one run. Heap-allocated
/// and pinned: the kernel holds a reference to the mesh.
struct Workspace {
  SurfaceMesh mesh;
  ClusterTree tree;
  PhysicsParams physics;
  std::unique_ptr<EfieKernel> kernel;
  int blockLevel = 0;

  Workspace() = default;
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;
};

std::unique_ptr<Workspace> prepare_workspace(const RunConfig& config);

/// Applies the thread cap from config.threads or the HMOM_THREADS
/// environment variable (config wins; 0 leaves the default).
void apply_thread_cap(int threads);

struct PrecondArtifacts {
  SparseComplexMatrix P;
  std::optional<SparseLu> factorization;
  MemoryReport memoryBefore, memoryAfter;
  double buildSeconds = 0.0;
  double factorSeconds = 0.0;
};

PrecondArtifacts build_preconditioner(const Workspace& ws,
                                      const PrecondConfig& config,
                                      PrecondVariant variant);

/// GMRES solve of the compressed system with an optional factorized
/// preconditioner.
GmresReport solve_system(const HMatrix& H, const SparseLu* precond,
                         const CVec& rhs, const GmresConfig& config);

struct IterationExperiment {
  int unpreconditioned = 0;
  int triTridiagonal = 0;
  int blockTridiagonal = 0;
  bool allConverged = false;
  GmresReport unpreconditionedReport, triReport, blockReport;
};

/// Runs the three solves of the iteration-count experiment on identical
/// excitation and tolerance.
IterationExperiment iteration_experiment(const Workspace& ws, const HMatrix& H,
                                         const RunConfig& config);

std::string residuals_csv(const GmresReport& report);
std::string spectrum_csv(const CVec& eigenvalues);
std::string rcs_csv(const struct FarFieldResult& result);

}  // namespace hmom
