#include "dcn/io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace dcn::io {

namespace {

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw InvalidInput(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InvalidInput(where + ": number is not finite");
  return v;
}

std::vector<double> numbers(const json& j, std::size_t n,
                            const std::string& where) {
  if (!j.is_array() || j.size() != n)
    throw InvalidInput(where + ": expected an array of " + std::to_string(n) +
                       " numbers");
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(where + ": missing \"" + key + "\"");
  return j.at(key);
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where + ": expected an array");
  return j;
}

Point2 point(const json& j, const std::string& where) {
  const auto v = numbers(j, 2, where);
  return {v[0], v[1]};
}

json pair(Point2 p) { return json::array({p.x, p.y}); }

ProbePose pose(const json& j, const std::string& where) {
  ProbePose p;
  p.center = point(field(j, "center", where), where + ".center");
  p.angle = j.contains("angle") ? number(j.at("angle"), where + ".angle") : 0.0;
  return p;
}

json pose_json(const ProbePose& p) {
  return {{"center", pair(p.center)}, {"angle", p.angle}};
}

json counts_json(const bench::OpCounts& c) {
  return {{"add", c.add}, {"mul", c.mul}, {"div", c.div}, {"sqrt", c.sqrt},
          {"total", c.total()}};
}

json row_json(const bench::CostRow& r) {
  json counts = {{"transform", r.transform.total()},
                 {"compose", r.compose.total()},
                 {"convert", r.convert ? json(r.convert->total()) : json()},
                 {"memory", r.memory_scalars}};
  json detail = {{"transform", counts_json(r.transform)},
                 {"compose", counts_json(r.compose)},
                 {"convert", r.convert ? counts_json(*r.convert) : json()}};
  json published = {{"transform", r.published.transform},
                {"compose", r.published.compose},
                {"convert", r.published.convert ? json(*r.published.convert) : json()},
                {"memory", r.published.memory}};
  json rates = {{"transform", r.transform_rate > 0 ? json(r.transform_rate) : json()},
                {"compose", r.compose_rate > 0 ? json(r.compose_rate) : json()}};
  return {{"representation", r.representation},
          {"counts", counts},
          {"count_detail", detail},
          {"published_counts", published},
          {"rates", rates}};
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path.string() + ": malformed JSON: " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& value) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << value.dump(2) << '\n';
  if (!out) throw std::runtime_error("error writing " + path.string());
}

json to_json(const Dcn& d) {
  return json::array({d.p0().re(), d.p0().im(), d.p1().re(), d.p1().im()});
}

Dcn dcn_from_json(const json& j, const std::string& where) {
  const auto v = numbers(j, 4, where);
  return {Complex(v[0], v[1]), Complex(v[2], v[3])};
}

std::vector<Dcn> dcns_from_json(const json& j) {
  array(j, "DCN list");
  std::vector<Dcn> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(dcn_from_json(j[i], "DCN " + std::to_string(i)));
  return out;
}

json to_json(const Se2Mat& m) { return m.to_array(); }

Se2Mat se2_from_json(const json& j) {
  const auto v = numbers(j, 9, "SE(2) matrix");
  return Se2Mat::from_array(std::span<const double, 9>(v.data(), 9));
}

json to_json(const DualQuat& q) { return q.to_array(); }

DualQuat dualquat_from_json(const json& j) {
  const auto v = numbers(j, 8, "dual quaternion");
  return DualQuat::from_array(std::span<const double, 8>(v.data(), 8));
}

json to_json(const CMat2& m) { return m.to_array(); }

CMat2 cmat2_from_json(const json& j) {
  const auto v = numbers(j, 8, "complex matrix");
  return CMat2::from_array(std::span<const double, 8>(v.data(), 8));
}

json to_json(const std::vector<Point2>& points) {
  json out = json::array();
  for (Point2 p : points) out.push_back(pair(p));
  return out;
}

std::vector<Point2> points_from_json(const json& j) {
  array(j, "points");
  std::vector<Point2> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(point(j[i], "point " + std::to_string(i)));
  return out;
}

json to_json(const Mesh& mesh) {
  json uv = json::array();
  for (const auto& t : mesh.uv) uv.push_back(json::array({t[0], t[1]}));
  json tris = json::array();
  for (const auto& t : mesh.triangles)
    tris.push_back(json::array({t[0], t[1], t[2]}));
  return {{"vertices", to_json(mesh.vertices)},
          {"triangles", std::move(tris)},
          {"uv", std::move(uv)}};
}

Mesh mesh_from_json(const json& j) {
  Mesh mesh;
  mesh.vertices = points_from_json(field(j, "vertices", "mesh"));
  const json& tris = array(field(j, "triangles", "mesh"), "mesh.triangles");
  for (std::size_t t = 0; t < tris.size(); ++t) {
    const std::string where = "triangle " + std::to_string(t);
    if (!tris[t].is_array() || tris[t].size() != 3)
      throw InvalidInput(where + ": expected 3 indices");
    std::array<std::size_t, 3> idx{};
    for (std::size_t k = 0; k < 3; ++k) {
      if (!tris[t][k].is_number_unsigned())
        throw InvalidInput(where + ": indices must be nonnegative integers");
      idx[k] = tris[t][k].get<std::size_t>();
    }
    mesh.triangles.push_back(idx);
  }
  const json& uv = array(field(j, "uv", "mesh"), "mesh.uv");
  for (std::size_t i = 0; i < uv.size(); ++i) {
    const auto v = numbers(uv[i], 2, "uv " + std::to_string(i));
    mesh.uv.push_back({v[0], v[1]});
  }
  mesh.validate();
  return mesh;
}

json to_json(const std::vector<Probe>& probes) {
  json out = json::array();
  for (const Probe& p : probes)
    out.push_back({{"id", p.id},
                   {"initial", pose_json(p.initial)},
                   {"current", pose_json(p.current)}});
  return out;
}

std::vector<Probe> probes_from_json(const json& j) {
  const json& list =
      j.is_object() ? field(j, "probes", "probe file") : array(j, "probe file");
  array(list, "probes");
  std::vector<Probe> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "probe " + std::to_string(i);
    const json& p = list[i];
    if (!p.is_object()) throw InvalidInput(where + ": expected an object");
    Probe probe;
    if (p.contains("id")) {
      const json& id = p.at("id");
      if (id.is_string())
        probe.id = id.get<std::string>();
      else if (id.is_number_integer())
        probe.id = std::to_string(id.get<long long>());
      else
        throw InvalidInput(where + ".id: expected a string or integer");
    } else {
      probe.id = std::to_string(i);
    }
    probe.initial = pose(field(p, "initial", where), where + ".initial");
    probe.current = p.contains("current")
                        ? pose(p.at("current"), where + ".current")
                        : probe.initial;
    out.push_back(std::move(probe));
  }
  return out;
}

json to_json(const WeightField& w) {
  json out = json::array();
  for (std::size_t i = 0; i < w.probes(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < w.vertices(); ++j) row.push_back(w.at(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

WeightField weights_from_json(const json& j) {
  array(j, "weights");
  if (j.empty()) throw InvalidInput("weights: no probe rows");
  const std::size_t probes = j.size();
  const std::size_t vertices = array(j[0], "weights row 0").size();
  std::vector<double> values;
  values.reserve(probes * vertices);
  for (std::size_t i = 0; i < probes; ++i) {
    const auto row = numbers(j[i], vertices, "weights row " + std::to_string(i));
    values.insert(values.end(), row.begin(), row.end());
  }
  return {probes, vertices, std::move(values)};
}

json to_json(const std::vector<bench::CostRow>& rows) {
  json reps = json::array();
  for (const auto& r : rows) reps.push_back(row_json(r));
  return {{"representations", std::move(reps)},
          {"discrepancies", bench::discrepancies(rows)}};
}

json to_json(const bench::ThroughputReport& report) {
  json out = to_json(report.rows);
  out["max_disagreement"] = report.max_disagreement;
  json runs = json::object();
  for (std::size_t r = 0; r < report.rows.size(); ++r)
    runs[report.rows[r].representation] = {
        {"transform", report.transform_runs[r]},
        {"compose", report.compose_runs[r]}};
  out["runs"] = std::move(runs);
  return out;
}

}  // namespace dcn::io
