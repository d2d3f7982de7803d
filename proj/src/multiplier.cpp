#include "dirichlet/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "dirichlet/arith.hpp"
#include "dirichlet/error.hpp"

namespace dirichlet {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<SparseEntry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.row >= rows_ || e.col >= cols_) throw ValidationError("sparse matrix: entry out of range");
  }
  std::stable_sort(entries_.begin(), entries_.end(), [](const SparseEntry& a, const SparseEntry& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
}

Complex SparseMatrix::at(std::size_t row, std::size_t col) const {
  Complex total{};
  for (const auto& e : entries_) {
    if (e.row == row && e.col == col) total += e.value;
  }
  return total;
}

std::vector<Complex> SparseMatrix::apply(std::span<const Complex> x) const {
  std::vector<Complex> y(rows_);
  for (const auto& e : entries_) y[e.row] += e.value * x[e.col];
  return y;
}

std::vector<Complex> SparseMatrix::apply_adjoint(std::span<const Complex> y) const {
  std::vector<Complex> x(cols_);
  for (const auto& e : entries_) x[e.col] += std::conj(e.value) * y[e.row];
  return x;
}

namespace {

double squared_norm(std::span<const Complex> v) {
  double total = 0.0;
  for (const auto& c : v) total += std::norm(c);
  return total;
}

}  // namespace

SingularValue largest_singular_value(const SparseMatrix& a, const PowerIterationOptions& options) {
  SingularValue out;
  const std::size_t n = a.cols();
  if (n == 0 || a.rows() == 0 || a.entries().empty()) return out;

  std::vector<Complex> v(n, Complex{1.0, 0.0});
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss;
  auto restart = [&] {
    for (auto& c : v) c = {gauss(rng), gauss(rng)};
    out.restarted = true;
  };

  double previous = -1.0;
  for (std::size_t it = 0; it < options.max_iterations; ++it) {
    ++out.iterations;
    const double vv = squared_norm(v);
    const auto u = a.apply(v);
    const double lambda = squared_norm(u) / vv;  // Rayleigh quotient of A^H A
    auto w = a.apply_adjoint(u);
    const double ww = squared_norm(w);

    if (ww == 0.0) {
      // v lies in the kernel of A.
      if (out.restarted) return out;
      restart();
      previous = -1.0;
      continue;
    }

    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual += std::norm(w[i] - lambda * v[i]);
    residual = std::sqrt(residual / vv);

    out.value = std::max(out.value, std::sqrt(lambda));
    if (previous >= 0.0 && std::abs(lambda - previous) <= options.rel_tol * lambda &&
        residual <= std::sqrt(options.rel_tol) * lambda) {
      out.value = std::sqrt(lambda);
      return out;
    }
    previous = lambda;

    const double scale = 1.0 / std::sqrt(ww);
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] * scale;

    if (!out.restarted && it + 1 == options.max_iterations / 2) {
      restart();
      previous = -1.0;
    }
  }
  throw ConvergenceError("power iteration did not converge within " +
                         std::to_string(options.max_iterations) + " iterations");
}

MultiplierMatrix build_matrix(const DirichletPolynomial& phi, const WeightSpec& spec,
                              std::vector<std::uint64_t> indices) {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] == 0) throw ValidationError("build_matrix: indices must be >= 1");
    if (i > 0 && indices[i] <= indices[i - 1]) {
      throw ValidationError("build_matrix: indices must be strictly increasing");
    }
  }
  std::vector<double> w(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) w[i] = weight(spec, indices[i]);

  std::vector<SparseEntry> entries;
  for (std::size_t col = 0; col < indices.size(); ++col) {
    const std::uint64_t n = indices[col];
    for (const auto& [k, a] : phi.terms()) {
      if (k > UINT64_MAX / n) break;
      const std::uint64_t m = k * n;
      const auto pos = std::lower_bound(indices.begin(), indices.end(), m);
      if (pos == indices.end() || *pos != m) continue;
      const auto row = static_cast<std::size_t>(pos - indices.begin());
      entries.push_back({row, col, a * std::sqrt(w[row] / w[col])});
    }
  }
  SparseMatrix matrix(indices.size(), indices.size(), std::move(entries));
  return MultiplierMatrix{std::move(indices), std::move(matrix), spec, phi};
}

double operator_norm(const MultiplierMatrix& a, const PowerIterationOptions& options) {
  return largest_singular_value(a.matrix, options).value;
}

std::vector<std::uint64_t> initial_segment(std::uint64_t bound) {
  std::vector<std::uint64_t> out(bound);
  for (std::uint64_t i = 0; i < bound; ++i) out[i] = i + 1;
  return out;
}

std::vector<std::uint64_t> smooth_chain(std::size_t prime_count, std::uint64_t bound) {
  return smooth_numbers(prime_count, bound);
}

std::vector<Complex> coordinates(const DirichletPolynomial& f, const WeightSpec& spec,
                                 std::span<const std::uint64_t> indices) {
  std::vector<Complex> out(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const Complex a = f.coefficient(indices[i]);
    if (a != Complex{}) out[i] = a * std::sqrt(weight(spec, indices[i]));
  }
  return out;
}

DirichletPolynomial from_coordinates(std::span<const Complex> c, const WeightSpec& spec,
                                     std::span<const std::uint64_t> indices) {
  DirichletPolynomial out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (c[i] != Complex{}) out.set(indices[i], c[i] / std::sqrt(weight(spec, indices[i])));
  }
  return out;
}

SandwichReport norm_sandwich_report(const DirichletPolynomial& phi, const WeightSpec& spec,
                                    double delta, double Delta,
                                    std::span<const std::uint64_t> sizes,
                                    std::optional<std::size_t> smooth_prime_count,
                                    const SandwichOptions& options) {
  if (sizes.empty()) throw ValidationError("sandwich: sizes must be nonempty");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] < sizes[i - 1]) throw ValidationError("sandwich: sizes must be nondecreasing");
  }
  if (delta < 0.0 || Delta < 0.0) throw ValidationError("sandwich: delta and Delta must be >= 0");

  SandwichReport report;
  report.symbol = to_string(phi);
  report.spec = to_string(spec);
  report.delta = delta;
  report.Delta = Delta;
  report.smooth_prime_count = smooth_prime_count;
  report.lower_slack = options.lower_slack;
  report.upper_slack = options.upper_slack;

  report.decay = check_prime_power_decay(spec, delta, options.condition_pmax, options.condition_kmax);
  if (!report.decay.pass) {
    report.warnings.push_back("prime-power decay fails at delta; the upper bound is not licensed");
  }
  if (!is_multiplicative(spec)) {
    report.warnings.push_back("weights are not multiplicative; the upper bound is not licensed");
  }
  report.growth = check_growth_bound(spec, Delta + 0.25, options.growth_bound);
  if (!report.growth.report.pass) {
    report.warnings.push_back("growth bound heuristic flags possible unboundedness above Delta");
  }

  const DirichletPolynomial projected =
      smooth_prime_count ? project_smooth(phi, *smooth_prime_count) : phi;
  report.line_lower_Delta = sup_on_line(projected, Delta, options.line_T, options.line_samples);
  report.torus_lower_Delta = sup_on_torus(bohr_lift(projected), Delta, options.torus_budget,
                                          options.torus_rounds, options.seed);
  report.lower_Delta = std::max(report.line_lower_Delta.value, report.torus_lower_Delta.value);

  report.line_lower_delta = sup_on_line(phi, delta, options.line_T, options.line_samples);
  report.torus_lower_delta =
      sup_on_torus(bohr_lift(phi), delta, options.torus_budget, options.torus_rounds, options.seed);
  report.ceiling_delta = triangle_ceiling(phi, delta);
  if (phi.size() <= 2) {
    // Two distinct frequencies can always be phase-aligned on the boundary line.
    report.closed_form_delta = report.ceiling_delta;
  }
  report.upper_reference =
      report.closed_form_delta.value_or(
          std::max(report.line_lower_delta.value, report.torus_lower_delta.value));

  double max_norm = 0.0;
  for (std::uint64_t bound : sizes) {
    auto indices = smooth_prime_count ? smooth_chain(*smooth_prime_count, bound)
                                      : initial_segment(bound);
    const std::size_t dimension = indices.size();
    const auto matrix = build_matrix(phi, spec, std::move(indices));
    const double norm = operator_norm(matrix, options.power);
    if (!report.rows.empty() &&
        norm < report.rows.back().compression_norm * (1.0 - options.monotone_tol)) {
      report.monotone = false;
    }
    report.rows.push_back({bound, dimension, norm});
    max_norm = std::max(max_norm, norm);
  }

  const double final_norm = report.rows.back().compression_norm;
  report.lower_gap = std::max(0.0, report.lower_Delta - final_norm);
  report.lower_ok = report.lower_gap <= options.lower_slack;
  report.upper_gap = std::max(0.0, max_norm - report.upper_reference);
  report.upper_ok = report.upper_gap <= options.upper_slack;
  return report;
}

}  // namespace dirichlet
