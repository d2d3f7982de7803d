#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dirichlet/simplex.hpp"
#include "dirichlet/weights.hpp"

namespace dirichlet {

// Nodes lo, lo + step, ... <= hi (at least two).
class SigmaGrid {
 public:
  SigmaGrid(double lo, double hi, double step);

  // "lo:hi:step"
  static SigmaGrid parse(std::string_view text);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double step() const { return step_; }
  const std::vector<double>& nodes() const { return nodes_; }
  std::string to_string() const;

 private:
  double lo_;
  double hi_;
  double step_;
  std::vector<double> nodes_;
};

enum class FitStatus { kOptimal, kIterationCapped };

std::string_view to_string(FitStatus s);

struct MeasureFit {
  SigmaGrid grid;
  std::vector<weight_kinds::Atom> atoms;  // positive masses only
  // max_{n <= N} |sum_j mass_j n^{-2 sigma_j} - w_n| of the returned atoms.
  double residual = 0.0;
  double lp_objective = 0.0;
  std::uint64_t n_max = 0;
  FitStatus status = FitStatus::kOptimal;
  std::size_t pivots = 0;
};

// Minimizes over nonnegative masses on the grid nodes the Chebyshev misfit
// max_{1 <= n <= N} |sum_j mu_j n^{-2 sigma_j} - w_n|.
MeasureFit fit_measure(const WeightSpec& spec, std::uint64_t n_max, const SigmaGrid& grid,
                       const lp::Options& options = {});

struct ResidualPoint {
  std::uint64_t n_max = 0;
  double residual = 0.0;
  FitStatus status = FitStatus::kOptimal;
};

std::vector<ResidualPoint> residual_curve(const WeightSpec& spec,
                                          std::span<const std::uint64_t> n_list,
                                          const SigmaGrid& grid, const lp::Options& options = {});

struct JensenReport {
  bool pass = true;
  std::uint64_t bound = 0;
  // First n with w_{n^2} != w_n^2: (n, w_{n^2}, w_n^2).
  std::optional<Witness> witness;
  // On pass: the implied point mass and the max |w_n - n^{-2 sigma*}|, n <= M.
  std::optional<double> sigma_star;
  std::optional<double> max_deviation;
};

// Checks w_{n^2} = w_n^2 (relative 1e-12) for 2 <= n <= M.
JensenReport jensen_check(const WeightSpec& spec, std::uint64_t bound, double rel_tol = 1e-12);

enum class GrowthKind { kGronwall, kTotientRatio };

GrowthKind parse_growth_kind(std::string_view text);
std::string_view to_string(GrowthKind k);

struct GrowthRow {
  std::uint64_t window_lo = 0;
  std::uint64_t window_hi = 0;
  // gronwall: window max of sigma(n)/(n ln ln n); totient_ratio: running max of phi(n)/n.
  double high = 0.0;
  std::uint64_t high_at = 0;
  // totient_ratio only: running min of phi(n)/n.
  double low = 0.0;
  std::uint64_t low_at = 0;
};

// Rows over dyadic windows [2^k, 2^{k+1}) clipped to [3, M] (gronwall) or
// [2, M] (totient_ratio). Pure data; asserts nothing about limits.
std::vector<GrowthRow> growth_report(GrowthKind kind, std::uint64_t bound);

}  // namespace dirichlet
