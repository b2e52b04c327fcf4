#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcn/bench_kernels.hpp"

namespace dcn::bench {

/// Operation counts as published for the four representations. Conversion
/// is to the 3x3 matrix, except for the 3x3 matrix itself where it is to DCN;
/// nullopt stands for "not available".
struct PublishedCounts {
  int transform;
  int compose;
  std::optional<int> convert;
  int memory;
};

struct CostRow {
  std::string representation;
  OpCounts transform;
  OpCounts compose;
  std::optional<OpCounts> convert;
  int memory_scalars = 0;
  PublishedCounts published{};
  /// Operations per second; zero until measured.
  double transform_rate = 0.0;
  double compose_rate = 0.0;
};

/// Representations in table order: DCN, DQN, 2x2 complex matrix, 3x3 real
/// matrix.
std::vector<CostRow> static_counts();

/// Human-readable notes for every audited count that differs from the
/// published one.
std::vector<std::string> discrepancies(const std::vector<CostRow>& rows);

struct ThroughputOptions {
  std::size_t iterations = 1'000'000;
  std::uint64_t seed = 1;
  int runs = 5;
  /// Distinct random transformations cycled through by the timed loops.
  std::size_t pool = 1024;
};

struct ThroughputReport {
  std::vector<CostRow> rows;
  /// Per-run rates, rows.size() x runs, same order as rows.
  std::vector<std::vector<double>> transform_runs;
  std::vector<std::vector<double>> compose_runs;
  /// Largest distance between a point transformed by any backend and by the
  /// DCN library reference.
  double max_disagreement = 0.0;
};

/// Times transform-a-point and compose-two-transforms for each backend on the
/// same seeded workload and reports the median rate over opts.runs runs.
/// Throws InvalidInput when iterations < 100000 or runs < 1.
ThroughputReport run_throughput(const ThroughputOptions& opts);

}  // namespace dcn::bench
