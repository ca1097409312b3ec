#include "hmom/bench.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "hmom/cluster_tree.hpp"
#include "hmom/physics.hpp"

namespace hmom {

namespace {

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("slope fit needs >= 2 matching samples");
  const double floor = 1e-12;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    double lx = std::log(std::max(x[i], floor));
    double ly = std::log(std::max(y[i], floor));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

BenchSweepResult bench_plate_sweep(const std::vector<double>& plateSizesLambda,
                                   const PrecondConfig& config,
                                   double wavelength) {
  BenchSweepResult sweep;
  PhysicsParams physics = PhysicsParams::for_wavelength(wavelength);
  for (double sizeLambda : plateSizesLambda) {
    try {
      double side = sizeLambda * wavelength;
      auto [mesh, tree] =
          build_clustered_mesh(mesh_plate(side, side, wavelength / 10.0), 30);
      EfieKernel kernel(mesh, physics);

      BenchRecord rec;
      rec.n = mesh.num_unknowns();

      double t0 = now_seconds();
      SparseComplexMatrix P =
          config.variant == PrecondVariant::triTridiagonal
              ? build_tridiagonal(kernel, config.entryMode)
              : build_block_tridiagonal(kernel, tree, config.entryMode,
                                        block_level_for(mesh.num_triangles()));
      rec.buildSeconds = now_seconds() - t0;
      rec.nnzBefore = memory_report(P).nnz;

      t0 = now_seconds();
      SparseLu F = SparseLu::factorize(P, config.pivotThreshold);
      rec.factorSeconds = now_seconds() - t0;
      rec.nnzAfter = memory_report(F).nnz;
      rec.peakEstimateBytes = memory_report(P).bytes + memory_report(F).bytes;

      std::mt19937 rng(12345);
      std::uniform_real_distribution<double> dist(-1.0, 1.0);
      CVec b(P.N);
      for (int i = 0; i < P.N; ++i) b[i] = cplx(dist(rng), dist(rng));
      // Average enough repetitions that small sizes give stable timings.
      int reps = std::max(5, static_cast<int>(2e6 / (rec.nnzAfter + 1)));
      t0 = now_seconds();
      CVec acc = CVec::Zero(P.N);
      for (int r = 0; r < reps; ++r) acc += F.apply(b);
      rec.applySeconds = (now_seconds() - t0) / reps;

      sweep.records.push_back(rec);
    } catch (const std::exception& e) {
      sweep.error = e.what();
      return sweep;  // abort with partial results
    }
  }

  if (sweep.records.size() >= 2) {
    std::vector<double> n, nnz, tb, tf, ta;
    for (const auto& r : sweep.records) {
      n.push_back(r.n);
      nnz.push_back(static_cast<double>(r.nnzBefore));
      tb.push_back(r.buildSeconds);
      tf.push_back(r.factorSeconds);
      ta.push_back(r.applySeconds);
    }
    sweep.nnzSlope = loglog_slope(n, nnz);
    sweep.buildTimeSlope = loglog_slope(n, tb);
    sweep.factorTimeSlope = loglog_slope(n, tf);
    sweep.applyTimeSlope = loglog_slope(n, ta);
  }
  sweep.complete = sweep.records.size() == plateSizesLambda.size();
  return sweep;
}

std::string bench_csv(const BenchSweepResult& sweep) {
  std::ostringstream out;
  out << "n,buildSeconds,factorSeconds,applySeconds,nnzBefore,nnzAfter,"
         "peakEstimateBytes\n";
  for (const auto& r : sweep.records)
    out << r.n << "," << r.buildSeconds << "," << r.factorSeconds << ","
        << r.applySeconds << "," << r.nnzBefore << "," << r.nnzAfter << ","
        << r.peakEstimateBytes << "\n";
  return out.str();
}

}  // namespace hmom
