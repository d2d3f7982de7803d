#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dirichlet::lp {

enum class Status { kOptimal, kUnbounded, kIterationCapped };

struct Options {
  std::size_t max_pivots = 200'000;
  double tolerance = 1e-12;
  // Smallest admissible pivot relative to the largest entry of its column.
  double pivot_tolerance = 1e-9;
  // Consecutive degenerate pivots tolerated before switching to Bland's rule.
  std::size_t degenerate_run = 50;
};

struct Result {
  Status status = Status::kIterationCapped;
  double objective = 0.0;
  std::vector<double> primal;  // x
  std::vector<double> duals;   // shadow price of each row
  std::size_t pivots = 0;
};

// maximize c.x subject to G x <= b, x >= 0, with b >= 0 so the slack basis
// is feasible. G is row-major, rows = b.size(), cols = c.size().
// Dense tableau; Dantzig pricing with lowest-index ties, largest-pivot ratio
// ties, falling back to Bland's rule on degenerate stalls. Deterministic.
Result maximize(std::span<const double> g, std::span<const double> c, std::span<const double> b,
                const Options& options = {});

}  // namespace dirichlet::lp
