#include "dcn/cli.hpp"

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dcn/bench.hpp"
#include "dcn/deform.hpp"
#include "dcn/io.hpp"
#include "dcn/se2.hpp"

namespace dcn::cli {

namespace {

using io::json;

// Raised for unreadable paths and bad flag combinations found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Sink {
  std::string path;
  std::ostream& out;

  void emit(const json& value, int indent = -1) const {
    if (path.empty()) {
      out << value.dump(indent) << '\n';
    } else {
      io::write_json_file(path, value);
    }
  }
  void emit_text(const std::string& text) const {
    if (path.empty()) {
      out << text;
    } else {
      std::ofstream f(path);
      if (!f) throw UsageError("cannot write " + path);
      f << text;
    }
  }
};

json load(const std::string& path) {
  try {
    return io::read_json_file(path);
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

Dcn dcn_arg(const std::vector<double>& v, const char* name) {
  if (v.size() != 4)
    throw UsageError(std::string(name) + " takes exactly 4 numbers");
  return Dcn::from_array(std::span<const double, 4>(v.data(), 4));
}

std::vector<Point2> transform_points(const UnitDcn& p,
                                     const std::vector<Point2>& pts) {
  std::vector<Point2> out;
  out.reserve(pts.size());
  for (Point2 v : pts) out.push_back(act(p, v));
  return out;
}

Dcn to_dcn(const std::string& from, const std::vector<double>& v) {
  const json j = v;
  if (from == "dcn") return io::dcn_from_json(j);
  if (from == "se2") return from_se2(io::se2_from_json(j));
  if (from == "dualquat") return from_dualquat(io::dualquat_from_json(j));
  return from_cmat2(io::cmat2_from_json(j));
}

json from_dcn(const std::string& to, const Dcn& d) {
  if (to == "dcn") return io::to_json(d);
  if (to == "se2") return io::to_json(to_se2(normalize(d)));
  if (to == "dualquat") return io::to_json(to_dualquat(d));
  return io::to_json(to_cmat2(d));
}

std::string fmt_count(int audited, std::optional<int> published) {
  std::ostringstream os;
  os << audited << " / " << (published ? std::to_string(*published) : "NA");
  return os.str();
}

std::string bench_table(const std::vector<bench::CostRow>& rows,
                        const bench::ThroughputReport* report) {
  std::ostringstream os;
  os << std::left << std::setw(20) << "representation" << std::setw(14)
     << "transform" << std::setw(14) << "compose" << std::setw(14)
     << "convert" << std::setw(10) << "memory";
  if (report) os << std::setw(16) << "transform/s" << "compose/s";
  os << "\n";
  os << std::setw(20) << "" << "(FLOPs audited / published; memory in scalars)\n";
  for (const auto& r : rows) {
    os << std::setw(20) << r.representation << std::setw(14)
       << fmt_count(r.transform.total(), r.published.transform) << std::setw(14)
       << fmt_count(r.compose.total(), r.published.compose) << std::setw(14)
       << (r.convert ? fmt_count(r.convert->total(), r.published.convert)
                     : std::string("NA / ") +
                           (r.published.convert ? std::to_string(*r.published.convert)
                                            : "NA"))
       << std::setw(10) << fmt_count(r.memory_scalars, r.published.memory);
    if (report) {
      os << std::setw(16) << std::setprecision(4) << std::scientific
         << r.transform_rate << r.compose_rate << std::defaultfloat;
    }
    os << "\n";
  }
  const auto notes = bench::discrepancies(rows);
  if (!notes.empty()) {
    os << "\ndiscrepancies against the published table:\n";
    for (const auto& n : notes) os << "  " << n << "\n";
  }
  if (report) {
    os << "\nmax disagreement between representations: "
       << report->max_disagreement << "\n";
    auto rate = [&](const char* name, bool compose) {
      for (const auto& r : rows)
        if (r.representation == name)
          return compose ? r.compose_rate : r.transform_rate;
      return 0.0;
    };
    const double dcn_c = rate("DCN", true);
    os << "compose:   DCN " << (dcn_c > rate("3x3 real matrix", true) ? ">" : "<=")
       << " 3x3 matrix, DCN " << (dcn_c > rate("DQN", true) ? ">" : "<=")
       << " DQN\n";
    os << "transform: 3x3 matrix "
       << (rate("3x3 real matrix", false) >= rate("DCN", false) ? ">=" : "<")
       << " DCN (converting to a matrix first pays off for many points)\n";
  }
  return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Rigid 2D transformations with anti-commutative dual complex "
               "numbers"};
  app.require_subcommand(1);
  std::string output;

  // transform
  auto* transform = app.add_subcommand("transform", "Apply a DCN to points");
  std::vector<double> t_dcn;
  std::string t_input;
  transform->add_option("--dcn", t_dcn, "p0.re p0.im p1.re p1.im")
      ->expected(4)
      ->delimiter(',')
      ->required();
  transform->add_option("-i,--input", t_input, "points JSON")->required();
  transform->add_option("-o,--output", output, "output file (default stdout)");

  // compose
  auto* compose = app.add_subcommand(
      "compose", "Product of a list of DCNs; the last one acts first");
  std::string c_input;
  compose->add_option("-i,--input", c_input, "JSON array of DCNs")->required();
  compose->add_option("-o,--output", output);

  // blend
  auto* blend = app.add_subcommand("blend", "Dual number linear blending");
  std::string b_input;
  blend->add_option("-i,--input", b_input,
                    "JSON {\"dcns\": [...], \"weights\": [...]}")
      ->required();
  blend->add_option("-o,--output", output);

  // slerp
  auto* slerp_cmd = app.add_subcommand("slerp", "Geodesic interpolation");
  std::vector<double> s_p, s_q;
  double s_t = 0.5;
  slerp_cmd->add_option("--p", s_p, "start DCN")->expected(4)->delimiter(',')->required();
  slerp_cmd->add_option("--q", s_q, "end DCN")->expected(4)->delimiter(',')->required();
  slerp_cmd->add_option("-t,--t", s_t, "parameter; values outside [0,1] extrapolate");
  slerp_cmd->add_option("-o,--output", output);

  // convert
  auto* convert = app.add_subcommand("convert", "Convert between representations");
  std::string from = "dcn", to = "se2";
  std::vector<double> value;
  const std::vector<std::string> reps{"dcn", "se2", "dualquat", "cmat2"};
  convert->add_option("--from", from)->check(CLI::IsMember(reps));
  convert->add_option("--to", to)->check(CLI::IsMember(reps));
  convert->add_option("--value", value, "flat numbers in the --from layout")
      ->delimiter(',')
      ->required();
  convert->add_option("-o,--output", output);

  // deform
  auto* deform_cmd = app.add_subcommand("deform", "Deform a mesh by probes");
  std::string mesh_path, probes_path, weights_path;
  double alpha = 2.0, eps = 1e-6;
  deform_cmd->add_option("--mesh", mesh_path)->required();
  deform_cmd->add_option("--probes", probes_path)->required();
  deform_cmd->add_option("--weights", weights_path, "painted weights (optional)");
  deform_cmd->add_option("--alpha", alpha, "inverse-distance exponent")
      ->check(CLI::PositiveNumber);
  deform_cmd->add_option("--eps", eps, "distance clamp")->check(CLI::NonNegativeNumber);
  deform_cmd->add_option("-o,--output", output);

  // grid
  auto* grid = app.add_subcommand("grid", "Generate a regular grid mesh");
  std::size_t rows = 30, cols = 30;
  std::vector<double> rect{0.0, 0.0, 1.0, 1.0};
  grid->add_option("--rows", rows)->check(CLI::Range(2, 100000));
  grid->add_option("--cols", cols)->check(CLI::Range(2, 100000));
  grid->add_option("--rect", rect, "x0 y0 x1 y1")->expected(4)->delimiter(',');
  grid->add_option("-o,--output", output);

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Cost comparison of representations");
  bench::ThroughputOptions bopts;
  std::string format = "text";
  bool counts_only = false;
  bench_cmd->add_option("--iterations", bopts.iterations)->check(CLI::Range(100000ul, 1000000000ul));
  bench_cmd->add_option("--seed", bopts.seed);
  bench_cmd->add_option("--runs", bopts.runs)->check(CLI::Range(1, 1000));
  bench_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  bench_cmd->add_flag("--counts-only", counts_only, "skip the timed runs");
  bench_cmd->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Sink sink{output, out};
  try {
    if (*transform) {
      const UnitDcn p = normalize(dcn_arg(t_dcn, "--dcn"));
      sink.emit(io::to_json(transform_points(p, io::points_from_json(load(t_input)))));
    } else if (*compose) {
      const auto list = io::dcns_from_json(load(c_input));
      if (list.empty()) throw InvalidInput("compose needs at least one DCN");
      UnitDcn acc;
      for (const Dcn& d : list) acc = mul(acc, normalize(d));
      sink.emit(io::to_json(acc.dcn()));
    } else if (*blend) {
      const json j = load(b_input);
      if (!j.is_object() || !j.contains("dcns") || !j.contains("weights"))
        throw InvalidInput("blend input needs \"dcns\" and \"weights\"");
      std::vector<UnitDcn> ps;
      for (const Dcn& d : io::dcns_from_json(j.at("dcns"))) ps.push_back(normalize(d));
      const json& wj = j.at("weights");
      if (!wj.is_array()) throw InvalidInput("weights: expected an array");
      std::vector<double> ws;
      for (std::size_t i = 0; i < wj.size(); ++i) {
        if (!wj[i].is_number())
          throw InvalidInput("weight " + std::to_string(i) + ": expected a number");
        ws.push_back(wj[i].get<double>());
      }
      sink.emit(io::to_json(dlb(ps, ws).dcn()));
    } else if (*slerp_cmd) {
      const UnitDcn p = normalize(dcn_arg(s_p, "--p"));
      const UnitDcn q = normalize(dcn_arg(s_q, "--q"));
      sink.emit(io::to_json(slerp(p, q, s_t).dcn()));
    } else if (*convert) {
      sink.emit(from_dcn(to, to_dcn(from, value)));
    } else if (*deform_cmd) {
      Mesh mesh = io::mesh_from_json(load(mesh_path));
      const auto probes = io::probes_from_json(load(probes_path));
      if (probes.empty()) throw InvalidInput("probe file has no probes");
      const WeightField weights =
          weights_path.empty() ? auto_weights(mesh, probes, alpha, eps)
                               : io::weights_from_json(load(weights_path));
      mesh.vertices = deform(mesh, probes, weights);
      sink.emit(io::to_json(mesh), 2);
    } else if (*grid) {
      if (rect.size() != 4) throw UsageError("--rect takes 4 numbers");
      sink.emit(io::to_json(make_grid(rows, cols, rect[0], rect[1], rect[2], rect[3])), 2);
    } else if (*bench_cmd) {
      if (counts_only) {
        const auto table = bench::static_counts();
        if (format == "json")
          sink.emit(io::to_json(table), 2);
        else
          sink.emit_text(bench_table(table, nullptr));
      } else {
        const auto report = bench::run_throughput(bopts);
        if (format == "json")
          sink.emit(io::to_json(report), 2);
        else
          sink.emit_text(bench_table(report.rows, &report));
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const json::exception& e) {
    err << "error: InvalidInput: " << e.what() << "\n";
    return kDomain;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace dcn::cli
