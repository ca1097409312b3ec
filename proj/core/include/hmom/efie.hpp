#pragma once

#include <vector>

#include "hmom/mesh.hpp"
#include "hmom/physics.hpp"
#include "hmom/quadrature.hpp"
#include "hmom/types.hpp"

namespace hmom {

struct QuadratureConfig {
  int farDegree = 5;        // plain double-quadrature triangle pairs
  int nearDegree = 7;       // smooth remainder under singularity extraction
  int selfOuterDegree = 10; // outer rule on touching/self pairs
  double nearFactor = 3.0;  // extraction radius in units of the larger edge

  QuadratureConfig refined(int delta) const {
    QuadratureConfig q = *this;
    q.farDegree += delta;
    q.nearDegree += delta;
    q.selfOuterDegree += delta;
    return q;
  }
  QuadratureConfig doubled() const {
    QuadratureConfig q = *this;
    q.farDegree *= 2;
    q.nearDegree *= 2;
    q.selfOuterDegree *= 2;
    return q;
  }
};

struct ComplexDenseBlock {
  std::vector<int> rowEdgeIds;
  std::vector<int> colEdgeIds;
  CMat entries;  // ohms
};

/// Galerkin EFIE matrix entries over RWG bases, any sub-block on demand.
/// Kernel: G = exp(-jkR)/(4 pi R) with the e^{+j omega t} convention. The
/// static 1/(4 pi R) part of near interactions is integrated analytically
/// over the source triangle; the smooth remainder numerically.
///
/// Entries are evaluated in a canonical (min, max) index orientation; the
/// continuous kernel is reciprocal, so this makes the discrete matrix
/// exactly symmetric.
class EfieKernel {
 public:
  EfieKernel(const SurfaceMesh& mesh, const PhysicsParams& physics,
             QuadratureConfig quad = {});

  cplx z_entry(int m, int n) const;

  /// Single (test triangle, source triangle) term of z_entry. The sum over
  /// the <=4 support pairs reproduces z_entry exactly.
  cplx z_triangle_pair_contribution(int m, int n, int ta, int tb) const;

  ComplexDenseBlock fill_block(const std::vector<int>& rowEdgeIds,
                               const std::vector<int>& colEdgeIds) const;

  /// Dense N x N matrix (parallel fill when OpenMP is enabled).
  CMat fill_dense() const;

  CVec excitation(const PlaneWave& wave) const;

  const SurfaceMesh& mesh() const { return mesh_; }
  const PhysicsParams& physics() const { return physics_; }
  const QuadratureConfig& quadrature() const { return quad_; }
  int size() const { return mesh_.num_unknowns(); }

 private:
  cplx pair_term_raw(int m, int n, int ta, int tb) const;
  bool triangles_touch(int ta, int tb) const;

  const SurfaceMesh& mesh_;
  PhysicsParams physics_;
  QuadratureConfig quad_;
  std::vector<TriQuadPoints> farQuad_;  // cached per triangle
  std::vector<double> maxEdge_;
};

}  // namespace hmom
