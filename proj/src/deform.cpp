#include "dcn/deform.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace dcn {

namespace {

void check_dimensions(const Mesh& mesh, std::span<const Probe> probes,
                      const WeightField& weights) {
  if (weights.probes() != probes.size() ||
      weights.vertices() != mesh.vertices.size())
    throw InvalidInput("weight field is " + std::to_string(weights.probes()) +
                       "x" + std::to_string(weights.vertices()) +
                       ", expected " + std::to_string(probes.size()) + "x" +
                       std::to_string(mesh.vertices.size()));
}

std::vector<UnitDcn> probe_motions(std::span<const Probe> probes) {
  std::vector<UnitDcn> motions;
  motions.reserve(probes.size());
  for (const Probe& p : probes) motions.push_back(probe_dcn(p));
  return motions;
}

// Blends the probe motions for one vertex; nullopt when degenerate.
std::optional<Point2> deform_vertex(std::span<const UnitDcn> motions,
                                    const WeightField& weights,
                                    std::size_t vertex, Point2 rest,
                                    std::vector<double>& column,
                                    const Tolerances& tol) {
  for (std::size_t i = 0; i < motions.size(); ++i)
    column[i] = weights.at(i, vertex);
  try {
    return act(dlb(motions, column, tol), rest);
  } catch (const DegenerateBlend&) {
    return std::nullopt;
  }
}

}  // namespace

void Mesh::validate() const {
  if (uv.size() != vertices.size())
    throw InvalidInput("mesh has " + std::to_string(uv.size()) +
                       " uv coordinates for " +
                       std::to_string(vertices.size()) + " vertices");
  for (std::size_t t = 0; t < triangles.size(); ++t)
    for (std::size_t idx : triangles[t])
      if (idx >= vertices.size())
        throw InvalidInput("triangle " + std::to_string(t) +
                           " references vertex " + std::to_string(idx));
}

Mesh make_grid(std::size_t rows, std::size_t cols, double x0, double y0,
               double x1, double y1) {
  if (rows < 2 || cols < 2)
    throw InvalidInput("grid needs at least 2 rows and 2 columns");
  Mesh mesh;
  mesh.vertices.reserve(rows * cols);
  mesh.uv.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const double v = static_cast<double>(r) / static_cast<double>(rows - 1);
    for (std::size_t c = 0; c < cols; ++c) {
      const double u = static_cast<double>(c) / static_cast<double>(cols - 1);
      mesh.vertices.push_back({x0 + (x1 - x0) * u, y0 + (y1 - y0) * v});
      mesh.uv.push_back({u, v});
    }
  }
  for (std::size_t r = 0; r + 1 < rows; ++r) {
    for (std::size_t c = 0; c + 1 < cols; ++c) {
      const std::size_t a = r * cols + c;
      const std::size_t b = a + 1;
      const std::size_t d = a + cols;
      const std::size_t e = d + 1;
      mesh.triangles.push_back({a, b, e});
      mesh.triangles.push_back({a, e, d});
    }
  }
  return mesh;
}

WeightField::WeightField(std::size_t probes, std::size_t vertices,
                         std::vector<double> values)
    : probes_(probes), vertices_(vertices), values_(std::move(values)) {
  if (values_.size() != probes_ * vertices_)
    throw InvalidInput("weight field has " + std::to_string(values_.size()) +
                       " entries, expected " +
                       std::to_string(probes_ * vertices_));
  for (double w : values_)
    if (!std::isfinite(w) || w < 0.0)
      throw InvalidInput("weights must be finite and nonnegative");
  for (std::size_t j = 0; j < vertices_; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < probes_; ++i) sum += at(i, j);
    if (!(sum > 0.0))
      throw InvalidInput("vertex " + std::to_string(j) +
                         " has no positive weight");
  }
}

WeightField WeightField::normalized() const {
  std::vector<double> out = values_;
  for (std::size_t j = 0; j < vertices_; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < probes_; ++i) sum += at(i, j);
    for (std::size_t i = 0; i < probes_; ++i) out[i * vertices_ + j] /= sum;
  }
  return {probes_, vertices_, std::move(out)};
}

UnitDcn probe_dcn(const Probe& probe) {
  const Point2 drag{probe.current.center.x - probe.initial.center.x,
                    probe.current.center.y - probe.initial.center.y};
  const UnitDcn motion =
      mul(from_translation(drag),
          from_rotation(probe.current.angle - probe.initial.angle,
                        probe.initial.center));
  return motion.p0().re() < 0.0 ? negate(motion) : motion;
}

WeightField auto_weights(const Mesh& mesh, std::span<const Probe> probes,
                         double alpha, double eps) {
  if (probes.empty()) throw InvalidInput("auto_weights needs a probe");
  if (!(alpha > 0.0)) throw InvalidInput("alpha must be positive");
  if (!(eps >= 0.0)) throw InvalidInput("eps must be nonnegative");

  const std::size_t n = probes.size();
  const std::size_t m = mesh.vertices.size();
  std::vector<double> w(n * m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    const Point2 v = mesh.vertices[j];
    std::optional<std::size_t> snapped;
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const double d = distance(v, probes[i].initial.center);
      if (d <= eps && d < nearest) {
        nearest = d;
        snapped = i;
      }
    }
    if (snapped) {
      w[*snapped * m + j] = 1.0;
      continue;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = distance(v, probes[i].initial.center);
      w[i * m + j] = std::pow(d, -alpha);
      sum += w[i * m + j];
    }
    for (std::size_t i = 0; i < n; ++i) w[i * m + j] /= sum;
  }
  return {n, m, std::move(w)};
}

std::vector<Point2> deform(const Mesh& mesh, std::span<const Probe> probes,
                           const WeightField& weights, const Tolerances& tol) {
  check_dimensions(mesh, probes, weights);
  const std::vector<UnitDcn> motions = probe_motions(probes);
  std::vector<double> column(probes.size());
  std::vector<Point2> out(mesh.vertices.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    try {
      for (std::size_t i = 0; i < motions.size(); ++i)
        column[i] = weights.at(i, j);
      out[j] = act(dlb(motions, column, tol), mesh.vertices[j]);
    } catch (const DegenerateBlend& e) {
      throw DegenerateBlend(e.norm(), j);
    }
  }
  return out;
}

LenientDeformResult deform_lenient(const Mesh& mesh,
                                   std::span<const Probe> probes,
                                   const WeightField& weights,
                                   std::span<const Point2> previous,
                                   const Tolerances& tol) {
  check_dimensions(mesh, probes, weights);
  if (previous.size() != mesh.vertices.size())
    throw InvalidInput("previous frame has the wrong vertex count");
  const std::vector<UnitDcn> motions = probe_motions(probes);
  std::vector<double> column(probes.size());
  LenientDeformResult result;
  result.positions.resize(mesh.vertices.size());
  for (std::size_t j = 0; j < mesh.vertices.size(); ++j) {
    if (auto p = deform_vertex(motions, weights, j, mesh.vertices[j], column,
                               tol)) {
      result.positions[j] = *p;
    } else {
      result.positions[j] = previous[j];
      result.degenerate.push_back(j);
    }
  }
  return result;
}

}  // namespace dcn
