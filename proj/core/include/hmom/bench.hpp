#pragma once

#include <string>
#include <vector>

#include "hmom/precond.hpp"

namespace hmom {

struct BenchRecord {
  int n = 0;
  double buildSeconds = 0.0;
  double factorSeconds = 0.0;
  double applySeconds = 0.0;  // one forward/back substitution
  size_t nnzBefore = 0;
  size_t nnzAfter = 0;
  size_t peakEstimateBytes = 0;
};

/// Least-squares slope of log(y) vs log(x); zero and negative samples are
/// clamped to a tiny positive floor.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct BenchSweepResult {
  std::vector<BenchRecord> records;
  double nnzSlope = 0.0;
  double buildTimeSlope = 0.0;
  double factorTimeSlope = 0.0;
  double applyTimeSlope = 0.0;
  bool complete = false;  // false when a run aborted mid-sweep
  std::string error;
};

/// Preconditioner build/factor/apply sweep over square plates of the given
/// side lengths (in wavelengths), meshed at lambda/10. Timing uses the
/// monotonic clock; apply is repeated and averaged.
BenchSweepResult bench_plate_sweep(const std::vector<double>& plateSizesLambda,
                                   const PrecondConfig& config,
                                   double wavelength = 1.0);

std::string bench_csv(const BenchSweepResult& sweep);

}  // namespace hmom
