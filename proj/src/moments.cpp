#include "dirichlet/moments.hpp"

#include <algorithm>
#include <cmath>

#include "dirichlet/arith.hpp"
#include "dirichlet/error.hpp"
#include "dirichlet/text.hpp"

namespace dirichlet {

SigmaGrid::SigmaGrid(double lo, double hi, double step) : lo_(lo), hi_(hi), step_(step) {
  if (!(lo >= 0.0)) throw ValidationError("grid: lo must be >= 0");
  if (!(hi > lo)) throw ValidationError("grid: hi must exceed lo");
  if (!(step > 0.0)) throw ValidationError("grid: step must be > 0");
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  if (count < 2) throw ValidationError("grid: fewer than two nodes");
  if (count > 1'000'000) throw ValidationError("grid: too many nodes");
  nodes_.reserve(count);
  for (std::size_t i = 0; i < count; ++i) nodes_.push_back(lo + static_cast<double>(i) * step);
}

SigmaGrid SigmaGrid::parse(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ValidationError("grid: expected lo:hi:step");
  return {parse_double(parts[0], "grid (lo)"), parse_double(parts[1], "grid (hi)"),
          parse_double(parts[2], "grid (step)")};
}

std::string SigmaGrid::to_string() const {
  return format_double(lo_) + ':' + format_double(hi_) + ':' + format_double(step_);
}

std::string_view to_string(FitStatus s) {
  return s == FitStatus::kOptimal ? "optimal" : "iteration-capped";
}

MeasureFit fit_measure(const WeightSpec& spec, std::uint64_t n_max, const SigmaGrid& grid,
                       const lp::Options& options) {
  if (n_max == 0) throw ValidationError("fit: N must be >= 1");
  const auto& nodes = grid.nodes();
  const std::size_t J = nodes.size();
  const std::size_t N = n_max;

  std::vector<double> w(N);
  for (std::size_t i = 0; i < N; ++i) w[i] = weight(spec, i + 1);

  // Dual of  min t  s.t. -t <= A mu - w <= t, mu >= 0:
  //   max w.(y2 - y1)  s.t. A^T (y2 - y1) <= 0, sum(y1 + y2) <= 1, y >= 0.
  // Its shadow prices are (mu, t).
  const std::size_t rows = J + 1;
  const std::size_t cols = 2 * N;
  std::vector<double> g(rows * cols, 0.0);
  for (std::size_t j = 0; j < J; ++j) {
    for (std::size_t i = 0; i < N; ++i) {
      const double a = std::pow(static_cast<double>(i + 1), -2.0 * nodes[j]);
      g[j * cols + i] = -a;
      g[j * cols + N + i] = a;
    }
  }
  for (std::size_t c = 0; c < cols; ++c) g[J * cols + c] = 1.0;
  std::vector<double> objective(cols);
  for (std::size_t i = 0; i < N; ++i) {
    objective[i] = -w[i];
    objective[N + i] = w[i];
  }
  std::vector<double> rhs(rows, 0.0);
  rhs[J] = 1.0;

  const auto solved = lp::maximize(g, objective, rhs, options);
  if (solved.status == lp::Status::kUnbounded) {
    throw InvariantError("fit: dual LP reported unbounded (it is bounded by construction)");
  }

  MeasureFit fit{grid, {}, 0.0, solved.objective, n_max,
                 solved.status == lp::Status::kOptimal ? FitStatus::kOptimal
                                                       : FitStatus::kIterationCapped,
                 solved.pivots};
  double largest = 0.0;
  for (std::size_t j = 0; j < J; ++j) largest = std::max(largest, solved.duals[j]);
  for (std::size_t j = 0; j < J; ++j) {
    const double mass = solved.duals[j];
    if (mass > 1e-13 * largest) fit.atoms.push_back({nodes[j], mass});
  }

  const auto replay = measure_weights(fit.atoms, n_max);
  for (std::size_t i = 0; i < N; ++i) {
    fit.residual = std::max(fit.residual, std::abs(replay[i + 1] - w[i]));
  }
  return fit;
}

std::vector<ResidualPoint> residual_curve(const WeightSpec& spec,
                                          std::span<const std::uint64_t> n_list,
                                          const SigmaGrid& grid, const lp::Options& options) {
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) throw ValidationError("curve: N list must be increasing");
  }
  std::vector<ResidualPoint> out;
  for (std::uint64_t n : n_list) {
    const auto fit = fit_measure(spec, n, grid, options);
    out.push_back({n, fit.residual, fit.status});
  }
  return out;
}

JensenReport jensen_check(const WeightSpec& spec, std::uint64_t bound, double rel_tol) {
  if (bound < 2) throw ValidationError("jensen: M must be >= 2");
  JensenReport report;
  report.bound = bound;
  for (std::uint64_t n = 2; n <= bound; ++n) {
    const double square = weight(spec, n * n);
    const double wn = weight(spec, n);
    const double expected = wn * wn;
    if (std::abs(square - expected) > rel_tol * std::max(square, expected)) {
      report.pass = false;
      report.witness = Witness{n, 0, square, expected};
      return report;
    }
  }
  const double sigma_star = -std::log(weight(spec, 2)) / (2.0 * std::log(2.0));
  double deviation = 0.0;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    deviation = std::max(deviation, std::abs(weight(spec, n) -
                                             std::pow(static_cast<double>(n), -2.0 * sigma_star)));
  }
  report.sigma_star = sigma_star;
  report.max_deviation = deviation;
  return report;
}

GrowthKind parse_growth_kind(std::string_view text) {
  if (text == "gronwall") return GrowthKind::kGronwall;
  if (text == "totient_ratio" || text == "totient-ratio") return GrowthKind::kTotientRatio;
  throw ValidationError("growth kind: expected gronwall or totient_ratio, got '" +
                        std::string(text) + "'");
}

std::string_view to_string(GrowthKind k) {
  return k == GrowthKind::kGronwall ? "gronwall" : "totient_ratio";
}

std::vector<GrowthRow> growth_report(GrowthKind kind, std::uint64_t bound) {
  if (bound < 100) throw ValidationError("growth: M must be >= 100");
  std::vector<GrowthRow> rows;
  const std::uint64_t start = kind == GrowthKind::kGronwall ? 3 : 2;

  double run_high = -1.0;
  std::uint64_t run_high_at = 0;
  double run_low = 2.0;
  std::uint64_t run_low_at = 0;
  for (std::uint64_t lo = 2; lo <= bound; lo *= 2) {
    GrowthRow row;
    row.window_lo = std::max(lo, start);
    row.window_hi = std::min(2 * lo - 1, bound);
    if (row.window_lo > row.window_hi) continue;
    double win_high = -1.0;
    std::uint64_t win_high_at = 0;
    for (std::uint64_t n = row.window_lo; n <= row.window_hi; ++n) {
      const auto f = factorize(n);
      const double nd = static_cast<double>(n);
      if (kind == GrowthKind::kGronwall) {
        const double v = static_cast<double>(divisor_sum(f)) / (nd * std::log(std::log(nd)));
        if (v > win_high) {
          win_high = v;
          win_high_at = n;
        }
      } else {
        const double v = static_cast<double>(totient(f)) / nd;
        if (v > run_high) {
          run_high = v;
          run_high_at = n;
        }
        if (v < run_low) {
          run_low = v;
          run_low_at = n;
        }
      }
    }
    if (kind == GrowthKind::kGronwall) {
      row.high = win_high;
      row.high_at = win_high_at;
    } else {
      row.high = run_high;
      row.high_at = run_high_at;
      row.low = run_low;
      row.low_at = run_low_at;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dirichlet
