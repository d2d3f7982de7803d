#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dirichlet/series.hpp"
#include "dirichlet/supnorm.hpp"
#include "dirichlet/weights.hpp"

namespace dirichlet {

struct SparseEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Complex value{};
};

// Coordinate-format complex matrix; entries ordered by (col, row).
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<SparseEntry> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<SparseEntry>& entries() const { return entries_; }
  Complex at(std::size_t row, std::size_t col) const;

  std::vector<Complex> apply(std::span<const Complex> x) const;
  std::vector<Complex> apply_adjoint(std::span<const Complex> y) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SparseEntry> entries_;
};

struct PowerIterationOptions {
  double rel_tol = 1e-12;
  std::size_t max_iterations = 200'000;
  // Seeds the random restart used when the deterministic start stagnates.
  std::uint64_t seed = 0;
};

struct SingularValue {
  double value = 0.0;
  std::size_t iterations = 0;
  bool restarted = false;
};

// Largest singular value by power iteration on A^H A from the normalized
// all-ones vector. Throws ConvergenceError when the iteration cap is hit.
SingularValue largest_singular_value(const SparseMatrix& a, const PowerIterationOptions& options = {});

// Compression of M_phi to `indices` in the orthonormal basis w_n^{-1/2} n^{-s}:
// A[m, n] = a_{m/n} sqrt(w_m / w_n) when n | m and m/n is in the support.
struct MultiplierMatrix {
  std::vector<std::uint64_t> indices;
  SparseMatrix matrix;
  WeightSpec spec;
  DirichletPolynomial symbol;
};

MultiplierMatrix build_matrix(const DirichletPolynomial& phi, const WeightSpec& spec,
                              std::vector<std::uint64_t> indices);

double operator_norm(const MultiplierMatrix& a, const PowerIterationOptions& options = {});

std::vector<std::uint64_t> initial_segment(std::uint64_t bound);
std::vector<std::uint64_t> smooth_chain(std::size_t prime_count, std::uint64_t bound);

// Orthonormal coordinates c_n = a_n sqrt(w_n) of f over `indices`, and back.
std::vector<Complex> coordinates(const DirichletPolynomial& f, const WeightSpec& spec,
                                 std::span<const std::uint64_t> indices);
DirichletPolynomial from_coordinates(std::span<const Complex> c, const WeightSpec& spec,
                                     std::span<const std::uint64_t> indices);

struct SandwichOptions {
  double line_T = 50.0;
  std::size_t line_samples = 20'001;
  std::size_t torus_budget = 2'000;
  std::size_t torus_rounds = 4;
  std::uint64_t seed = 0;
  // Allowed excess of a lower sup estimate on Omega_Delta over the final norm.
  double lower_slack = 1e-9;
  // Allowed excess of a compression norm over the reference sup on Omega_delta.
  double upper_slack = 1e-9;
  double monotone_tol = 1e-12;
  std::uint64_t condition_pmax = 100;
  unsigned condition_kmax = 10;
  std::uint64_t growth_bound = 10'000;
  PowerIterationOptions power;
};

struct SandwichRow {
  std::uint64_t bound = 0;
  std::size_t dimension = 0;
  double compression_norm = 0.0;
};

struct SandwichReport {
  std::string symbol;
  std::string spec;
  double delta = 0.0;
  double Delta = 0.0;
  std::optional<std::size_t> smooth_prime_count;
  std::vector<SandwichRow> rows;

  // Lower estimates of |pi_N phi| on Omega_Delta.
  SupEstimate line_lower_Delta;
  SupEstimate torus_lower_Delta;
  double lower_Delta = 0.0;
  // Reference for |phi| on Omega_delta: closed form for 1 + b q^{-s},
  // otherwise the best lower estimate. The certified ceiling is reported too.
  SupEstimate line_lower_delta;
  SupEstimate torus_lower_delta;
  std::optional<double> closed_form_delta;
  double upper_reference = 0.0;
  double ceiling_delta = 0.0;

  bool monotone = true;
  bool lower_ok = true;
  bool upper_ok = true;
  double lower_gap = 0.0;   // max(0, lower_Delta - final norm)
  double upper_gap = 0.0;   // max(0, max norm - upper_reference)
  double lower_slack = 0.0;
  double upper_slack = 0.0;

  ConditionReport decay;
  GrowthBound growth;
  std::vector<std::string> warnings;
};

// `sizes` are upper bounds M; the index set is <P_N> cap [1, M] when
// smooth_prime_count is set, else 1..M.
SandwichReport norm_sandwich_report(const DirichletPolynomial& phi, const WeightSpec& spec,
                                    double delta, double Delta,
                                    std::span<const std::uint64_t> sizes,
                                    std::optional<std::size_t> smooth_prime_count,
                                    const SandwichOptions& options = {});

}  // namespace dirichlet
