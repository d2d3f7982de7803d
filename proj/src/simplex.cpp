#include "dirichlet/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dirichlet/error.hpp"

namespace dirichlet::lp {

Result maximize(std::span<const double> g, std::span<const double> c, std::span<const double> b,
                const Options& options) {
  const std::size_t m = b.size();
  const std::size_t n = c.size();
  if (g.size() != m * n) throw ValidationError("lp: constraint matrix has the wrong size");
  for (double v : b) {
    if (v < 0.0) throw ValidationError("lp: right-hand side must be nonnegative");
  }

  // Tableau rows 0..m-1: [G | I | b]; row m: [-c | 0 | 0].
  const std::size_t width = n + m + 1;
  std::vector<double> t((m + 1) * width, 0.0);
  auto at = [&](std::size_t r, std::size_t col) -> double& { return t[r * width + col]; };
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) at(r, j) = g[r * n + j];
    at(r, n + r) = 1.0;
    at(r, width - 1) = b[r];
  }
  for (std::size_t j = 0; j < n; ++j) at(m, j) = -c[j];

  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

  Result result;
  std::size_t degenerate = 0;
  const double tol = options.tolerance;
  while (true) {
    const bool bland = degenerate >= options.degenerate_run;
    std::size_t enter = width;
    double most_negative = -tol;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      const double rc = at(m, j);
      if (rc < most_negative) {
        enter = j;
        if (bland) break;
        most_negative = rc;
      }
    }
    if (enter == width) {
      result.status = Status::kOptimal;
      break;
    }
    if (result.pivots >= options.max_pivots) {
      result.status = Status::kIterationCapped;
      break;
    }

    // Ratio test. Pivots must be large relative to the entering column; among
    // (near-)tied ratios the largest pivot wins, or the lowest basis index
    // under Bland's rule. The LPs here are heavily degenerate, so the tie
    // rule decides most pivots and hence the conditioning of the tableau.
    double column_scale = 0.0;
    for (std::size_t r = 0; r < m; ++r) column_scale = std::max(column_scale, at(r, enter));
    const double pivot_floor = std::max(tol, options.pivot_tolerance * column_scale);
    std::size_t leave = m;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < m; ++r) {
      const double a = at(r, enter);
      if (a <= pivot_floor) continue;
      const double ratio = at(r, width - 1) / a;
      if (leave == m || ratio < best_ratio - tol) {
        best_ratio = ratio;
        leave = r;
      } else if (ratio <= best_ratio + tol) {
        const bool better = bland ? basis[r] < basis[leave] : a > at(leave, enter);
        if (better) {
          best_ratio = std::min(best_ratio, ratio);
          leave = r;
        }
      }
    }
    if (leave == m) {
      result.status = Status::kUnbounded;
      break;
    }
    degenerate = best_ratio <= tol ? degenerate + 1 : 0;

    const double pivot = at(leave, enter);
    for (std::size_t j = 0; j < width; ++j) at(leave, j) /= pivot;
    at(leave, enter) = 1.0;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave) continue;
      const double factor = at(r, enter);
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) at(r, j) -= factor * at(leave, j);
      at(r, enter) = 0.0;
    }
    basis[leave] = enter;
    ++result.pivots;
  }

  result.objective = at(m, width - 1);
  result.primal.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) result.primal[basis[r]] = at(r, width - 1);
  }
  result.duals.resize(m);
  for (std::size_t r = 0; r < m; ++r) result.duals[r] = at(m, n + r);
  return result;
}

}  // namespace dirichlet::lp
