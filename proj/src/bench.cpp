#include "dcn/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "dcn/dcn.hpp"
#include "dcn/se2.hpp"

namespace dcn::bench {

namespace {

using C = CountedScalar;

template <class F>
OpCounts count(F&& f) {
  CountedScalar::counts() = {};
  f();
  return CountedScalar::counts();
}

// Values only matter for the to_dcn branch; any rigid motion works.
DcnRep<C> sample_dcn() {
  return {{C(0.6), C(0.8)}, {C(0.25), C(-1.5)}};
}

template <class Rep>
int memory_of() {
  return static_cast<int>(sizeof(Rep) / sizeof(double));
}

DcnRep<double> dcn_rep(const UnitDcn& p) {
  return {{p.p0().re(), p.p0().im()}, {p.p1().re(), p.p1().im()}};
}

DualQuatRep<double> dualquat_rep(const UnitDcn& p) {
  const DualQuat q = to_dualquat(p);
  return {{q.q0.w, q.q0.x, q.q0.y, q.q0.z}, {q.q1.w, q.q1.x, q.q1.y, q.q1.z}};
}

CMat2Rep<double> cmat2_rep(const UnitDcn& p) {
  const CMat2 m = to_cmat2(p);
  auto cx = [](Complex z) { return Cx<double>{z.re(), z.im()}; };
  return {cx(m.m00), cx(m.m01), cx(m.m10), cx(m.m11)};
}

Mat3Rep<double> mat3_rep(const UnitDcn& p) {
  const auto a = to_se2(p).to_array();
  Mat3Rep<double> m;
  std::copy(a.begin(), a.end(), m.m);
  return m;
}

// Keeps the timed loops from being optimized away.
volatile double g_sink = 0.0;

using Clock = std::chrono::steady_clock;

template <class Rep>
double time_transform(const std::vector<Rep>& pool, std::size_t n) {
  Vec2<double> v{0.25, -0.5};
  std::size_t k = 0;
  const auto start = Clock::now();
  for (std::size_t i = 0; i < n; ++i) {
    v = transform(pool[k], v);
    if (++k == pool.size()) k = 0;
  }
  const auto stop = Clock::now();
  g_sink = v.x + v.y;
  return static_cast<double>(n) /
         std::chrono::duration<double>(stop - start).count();
}

template <class Rep>
double time_compose(const std::vector<Rep>& pool, std::size_t n) {
  Rep acc = pool.front();
  std::size_t k = 0;
  const auto start = Clock::now();
  for (std::size_t i = 0; i < n; ++i) {
    acc = compose(acc, pool[k]);
    if (++k == pool.size()) k = 0;
  }
  const auto stop = Clock::now();
  g_sink = reinterpret_cast<const double*>(&acc)[0];
  return static_cast<double>(n) /
         std::chrono::duration<double>(stop - start).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double gap(Vec2<double> a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

std::vector<CostRow> static_counts() {
  std::vector<CostRow> rows;

  {
    const DcnRep<C> a = sample_dcn();
    const DcnRep<C> b{{C(0.0), C(1.0)}, {C(2.0), C(0.5)}};
    CostRow r{"DCN", {}, {}, {}, memory_of<DcnRep<double>>(), {22, 20, 15, 4}};
    r.transform = count([&] { transform(a, Vec2<C>{C(1.0), C(2.0)}); });
    r.compose = count([&] { compose(a, b); });
    r.convert = count([&] { to_matrix(a); });
    rows.push_back(r);
  }
  {
    const DualQuatRep<C> a{{C(0.6), C(0.8), C(0.0), C(0.0)},
                           {C(0.0), C(0.0), C(0.25), C(-1.5)}};
    CostRow r{"DQN", {}, {}, std::nullopt, memory_of<DualQuatRep<double>>(),
              {92, 88, std::nullopt, 8}};
    r.transform = count([&] { transform(a, Vec2<C>{C(1.0), C(2.0)}); });
    r.compose = count([&] { compose(a, a); });
    rows.push_back(r);
  }
  {
    const CMat2Rep<C> a{{C(0.6), C(0.8)},
                        {C(0.25), C(-1.5)},
                        {C(0.0), C(0.0)},
                        {C(0.6), C(-0.8)}};
    CostRow r{"2x2 complex matrix", {}, {}, {},
              memory_of<CMat2Rep<double>>(), {112, 56, 15, 8}};
    r.transform = count([&] { transform(a, Vec2<C>{C(1.0), C(2.0)}); });
    r.compose = count([&] { compose(a, a); });
    r.convert = count([&] { to_matrix(a); });
    rows.push_back(r);
  }
  {
    const Mat3Rep<C> a = to_matrix(sample_dcn());
    CostRow r{"3x3 real matrix", {}, {}, {}, memory_of<Mat3Rep<double>>(),
              {15, 45, 18, 9}};
    r.transform = count([&] { transform(a, Vec2<C>{C(1.0), C(2.0)}); });
    r.compose = count([&] { compose(a, a); });
    r.convert = count([&] { to_dcn(a); });
    rows.push_back(r);
  }
  return rows;
}

std::vector<std::string> discrepancies(const std::vector<CostRow>& rows) {
  std::vector<std::string> out;
  auto note = [&](const CostRow& r, const char* what, int audited,
                  std::optional<int> published) {
    if (published && *published == audited) return;
    std::ostringstream os;
    os << r.representation << " " << what << ": audited " << audited
       << ", published " << (published ? std::to_string(*published) : "NA");
    out.push_back(os.str());
  };
  for (const CostRow& r : rows) {
    note(r, "transform", r.transform.total(), r.published.transform);
    note(r, "compose", r.compose.total(), r.published.compose);
    if (r.convert) {
      note(r, "convert", r.convert->total(), r.published.convert);
    } else if (r.published.convert) {
      out.push_back(r.representation + " convert: audited NA, published " +
                    std::to_string(*r.published.convert));
    }
    note(r, "memory", r.memory_scalars, r.published.memory);
  }
  return out;
}

ThroughputReport run_throughput(const ThroughputOptions& opts) {
  if (opts.iterations < 100'000)
    throw InvalidInput("benchmark needs at least 100000 iterations");
  if (opts.runs < 1) throw InvalidInput("benchmark needs at least one run");
  if (opts.pool < 2) throw InvalidInput("benchmark pool needs two entries");

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi,
                                               std::numbers::pi);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);

  std::vector<UnitDcn> motions;
  std::vector<Point2> points;
  for (std::size_t i = 0; i < opts.pool; ++i) {
    const double theta = angle(rng);
    const Point2 center{coord(rng), coord(rng)};
    const Point2 shift{coord(rng), coord(rng)};
    motions.push_back(mul(from_translation(shift), from_rotation(theta, center)));
    points.push_back({coord(rng), coord(rng)});
  }

  std::vector<DcnRep<double>> dcns;
  std::vector<DualQuatRep<double>> dqs;
  std::vector<CMat2Rep<double>> cms;
  std::vector<Mat3Rep<double>> mats;
  for (const UnitDcn& p : motions) {
    dcns.push_back(dcn_rep(p));
    dqs.push_back(dualquat_rep(p));
    cms.push_back(cmat2_rep(p));
    mats.push_back(mat3_rep(p));
  }

  ThroughputReport report;
  report.rows = static_counts();

  // Cross-representation agreement on single transforms, on compositions and
  // on the matrix-to-DCN conversion.
  for (std::size_t i = 0; i < opts.pool; ++i) {
    const std::size_t j = (i + 1) % opts.pool;
    const Vec2<double> v{points[i].x, points[i].y};
    const Point2 ref = act(motions[i], points[i]);
    const Point2 ref2 = act(mul(motions[i], motions[j]), points[i]);
    const double errs[] = {
        gap(transform(dcns[i], v), ref),
        gap(transform(dqs[i], v), ref),
        gap(transform(cms[i], v), ref),
        gap(transform(mats[i], v), ref),
        gap(transform(to_dcn(mats[i]), v), ref),
        gap(transform(compose(dcns[i], dcns[j]), v), ref2),
        gap(transform(compose(dqs[i], dqs[j]), v), ref2),
        gap(transform(compose(cms[i], cms[j]), v), ref2),
        gap(transform(compose(mats[i], mats[j]), v), ref2),
    };
    for (double e : errs)
      report.max_disagreement = std::max(report.max_disagreement, e);
  }

  const std::size_t n = opts.iterations;
  report.transform_runs.assign(report.rows.size(), {});
  report.compose_runs.assign(report.rows.size(), {});

  // Warm-up pass, untimed.
  time_transform(dcns, n / 10);
  time_transform(dqs, n / 10);
  time_transform(cms, n / 10);
  time_transform(mats, n / 10);

  for (int run = 0; run < opts.runs; ++run) {
    report.transform_runs[0].push_back(time_transform(dcns, n));
    report.transform_runs[1].push_back(time_transform(dqs, n));
    report.transform_runs[2].push_back(time_transform(cms, n));
    report.transform_runs[3].push_back(time_transform(mats, n));
    report.compose_runs[0].push_back(time_compose(dcns, n));
    report.compose_runs[1].push_back(time_compose(dqs, n));
    report.compose_runs[2].push_back(time_compose(cms, n));
    report.compose_runs[3].push_back(time_compose(mats, n));
  }
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    report.rows[r].transform_rate = median(report.transform_runs[r]);
    report.rows[r].compose_rate = median(report.compose_runs[r]);
  }
  return report;
}

}  // namespace dcn::bench
