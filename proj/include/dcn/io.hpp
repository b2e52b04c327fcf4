#pragma once

// JSON schemas shared by the command-line tool and the interactive front end.
//
//   DCN       [p0.re, p0.im, p1.re, p1.im]
//   SE(2)     9 numbers, row-major, bottom row included
//   dual quat [q0.w, q0.x, q0.y, q0.z, q1.w, q1.x, q1.y, q1.z]
//   CMat2     [m00.re, m00.im, m01.re, m01.im, m10.re, m10.im, m11.re, m11.im]
//   points    [[x, y], ...]
//   mesh      {"vertices": [[x, y], ...], "triangles": [[a, b, c], ...],
//              "uv": [[u, v], ...]}
//   probes    [{"id": ..., "initial": {"center": [x, y], "angle": r},
//               "current": {...}}, ...]   (or {"probes": [...]})
//   weights   [[w_00, ..., w_0m], ...], one row per probe
//
// Every parser throws InvalidInput naming the offending record.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcn/bench.hpp"
#include "dcn/deform.hpp"
#include "dcn/se2.hpp"

namespace dcn::io {

using nlohmann::json;

/// Reads and parses a JSON file. Throws InvalidInput on parse errors and
/// std::runtime_error when the file cannot be opened.
json read_json_file(const std::filesystem::path& path);
/// Writes with a trailing newline; throws std::runtime_error on I/O failure.
void write_json_file(const std::filesystem::path& path, const json& value);

json to_json(const Dcn& d);
Dcn dcn_from_json(const json& j, const std::string& where = "DCN");
std::vector<Dcn> dcns_from_json(const json& j);

json to_json(const Se2Mat& m);
Se2Mat se2_from_json(const json& j);
json to_json(const DualQuat& q);
DualQuat dualquat_from_json(const json& j);
json to_json(const CMat2& m);
CMat2 cmat2_from_json(const json& j);

json to_json(const std::vector<Point2>& points);
std::vector<Point2> points_from_json(const json& j);

json to_json(const Mesh& mesh);
Mesh mesh_from_json(const json& j);

json to_json(const std::vector<Probe>& probes);
std::vector<Probe> probes_from_json(const json& j);

json to_json(const WeightField& w);
WeightField weights_from_json(const json& j);

json to_json(const bench::ThroughputReport& report);
json to_json(const std::vector<bench::CostRow>& rows);

}  // namespace dcn::io
