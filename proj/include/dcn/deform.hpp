#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dcn/dcn.hpp"

namespace dcn {

/// Textured triangle mesh; only vertex positions are ever deformed.
struct Mesh {
  std::vector<Point2> vertices;
  std::vector<std::array<std::size_t, 3>> triangles;
  std::vector<std::array<double, 2>> uv;

  /// Throws InvalidInput on out-of-range triangle indices or a uv count that
  /// differs from the vertex count.
  void validate() const;
};

/// Regular grid of rows x cols vertices spanning [x0, x1] x [y0, y1], two
/// triangles per cell, uv running over [0, 1]^2.
Mesh make_grid(std::size_t rows, std::size_t cols, double x0, double y0,
               double x1, double y1);

struct ProbePose {
  Point2 center;
  /// Radians, unwrapped (accumulated over gestures).
  double angle = 0.0;
};

struct Probe {
  std::string id;
  ProbePose initial;
  ProbePose current;
};

/// Dense probes x vertices matrix of nonnegative blend weights.
class WeightField {
 public:
  WeightField() = default;
  /// Row-major values, one row per probe. Throws InvalidInput on negative or
  /// non-finite entries, a size mismatch, or a vertex with no positive weight.
  WeightField(std::size_t probes, std::size_t vertices,
              std::vector<double> values);

  std::size_t probes() const { return probes_; }
  std::size_t vertices() const { return vertices_; }
  double at(std::size_t probe, std::size_t vertex) const {
    return values_[probe * vertices_ + vertex];
  }
  const std::vector<double>& values() const { return values_; }

  /// Copy with every vertex column scaled to sum to one. Blending is
  /// invariant under this scaling, so it only matters for display.
  WeightField normalized() const;

 private:
  std::size_t probes_ = 0;
  std::size_t vertices_ = 0;
  std::vector<double> values_;
};

/// The rigid motion taking the probe's initial pose to its current pose,
/// with the sign chosen so that Re(p0) >= 0.
UnitDcn probe_dcn(const Probe& probe);

/// Shepard (normalized inverse-distance) weights against the probes' initial
/// centers: w_ij ~ max(d_ij, eps)^-alpha. A vertex within eps of some probe
/// is bound entirely to the nearest such probe.
WeightField auto_weights(const Mesh& mesh, std::span<const Probe> probes,
                         double alpha = 2.0, double eps = 1e-6);

/// Moves every rest vertex by the DLB of the probe motions under its weight
/// column. Throws DegenerateBlend carrying the offending vertex index.
std::vector<Point2> deform(const Mesh& mesh, std::span<const Probe> probes,
                           const WeightField& weights,
                           const Tolerances& tol = {});

struct LenientDeformResult {
  std::vector<Point2> positions;
  /// Vertices whose blend degenerated; they kept their previous position.
  std::vector<std::size_t> degenerate;
};

/// Interactive variant of deform: a degenerate vertex keeps its entry from
/// `previous` instead of aborting the whole frame.
LenientDeformResult deform_lenient(const Mesh& mesh,
                                   std::span<const Probe> probes,
                                   const WeightField& weights,
                                   std::span<const Point2> previous,
                                   const Tolerances& tol = {});

}  // namespace dcn
