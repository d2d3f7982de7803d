#include "dirichlet/supnorm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "dirichlet/arith.hpp"
#include "dirichlet/error.hpp"

namespace dirichlet {

BohrLift bohr_lift(const DirichletPolynomial& phi) {
  BohrLift lift;
  std::vector<Factorization> factored;
  for (const auto& [n, a] : phi.terms()) {
    factored.push_back(factorize(n));
    for (const auto& pp : factored.back().factors) lift.prime_basis.push_back(pp.prime);
  }
  std::sort(lift.prime_basis.begin(), lift.prime_basis.end());
  lift.prime_basis.erase(std::unique(lift.prime_basis.begin(), lift.prime_basis.end()),
                         lift.prime_basis.end());

  std::size_t i = 0;
  for (const auto& [n, a] : phi.terms()) {
    std::vector<unsigned> alpha(lift.prime_basis.size(), 0);
    for (const auto& [p, e] : factored[i++].factors) {
      const auto pos = std::lower_bound(lift.prime_basis.begin(), lift.prime_basis.end(), p);
      alpha[static_cast<std::size_t>(pos - lift.prime_basis.begin())] = e;
    }
    lift.monomials.emplace(std::move(alpha), a);
  }
  return lift;
}

DirichletPolynomial reconstruct(const BohrLift& lift) {
  DirichletPolynomial out;
  for (const auto& [alpha, c] : lift.monomials) {
    std::uint64_t n = 1;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      for (unsigned e = 0; e < alpha[j]; ++e) n *= lift.prime_basis[j];
    }
    out.add(n, c);
  }
  return out;
}

Complex evaluate_lift(const BohrLift& lift, std::span<const double> theta, double delta) {
  if (theta.size() != lift.prime_basis.size()) {
    throw ValidationError("torus: angle count does not match the prime basis");
  }
  std::vector<Complex> z(theta.size());
  for (std::size_t j = 0; j < theta.size(); ++j) {
    z[j] = std::polar(std::pow(static_cast<double>(lift.prime_basis[j]), -delta), theta[j]);
  }
  Complex total{};
  for (const auto& [alpha, c] : lift.monomials) {
    Complex term = c;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      for (unsigned e = 0; e < alpha[j]; ++e) term *= z[j];
    }
    total += term;
  }
  return total;
}

std::size_t line_sample_floor(const DirichletPolynomial& phi, double T) {
  const double fastest = phi.empty() ? 0.0 : std::log(static_cast<double>(phi.max_index()));
  const double periods = 2.0 * T * fastest / (2.0 * std::numbers::pi);
  return std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(16.0 * periods)) + 1);
}

SupEstimate sup_on_line(const DirichletPolynomial& phi, double delta, double T,
                        std::size_t samples) {
  if (!(T > 0.0)) throw ValidationError("sup line: T must be > 0");
  if (samples < 2) throw ValidationError("sup line: samples must be >= 2");
  const std::size_t count = std::max(samples, line_sample_floor(phi, T));

  SupEstimate best;
  best.value = std::abs(evaluate(phi, {delta, 0.0}));
  best.argmax = {0.0};
  best.evaluations = 1;
  const double h = 2.0 * T / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = -T + h * static_cast<double>(i);
    const double v = std::abs(evaluate(phi, {delta, t}));
    ++best.evaluations;
    if (v > best.value) {
      best.value = v;
      best.argmax = {t};
    }
  }
  return best;
}

namespace {

// Maximizes g on [lo, hi] assuming unimodality; returns the best abscissa seen.
template <class F>
std::pair<double, double> golden_max(F&& g, double lo, double hi, std::size_t& evaluations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = g(x1);
  double f2 = g(x2);
  evaluations += 2;
  for (int it = 0; it < 80 && (b - a) > 1e-12; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = g(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = g(x1);
    }
    ++evaluations;
  }
  return f1 >= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

}  // namespace

SupEstimate sup_on_torus(const BohrLift& lift, double delta, std::size_t budget,
                         std::size_t refine_rounds, std::uint64_t seed) {
  if (budget < 1) throw ValidationError("sup torus: budget must be >= 1");
  const std::size_t dim = lift.prime_basis.size();
  SupEstimate best;
  best.seed = seed;
  best.argmax.assign(dim, 0.0);
  best.value = std::abs(evaluate_lift(lift, best.argmax, delta));
  best.evaluations = 1;
  if (dim == 0) return best;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<double> theta(dim);
  for (std::size_t s = 0; s < budget; ++s) {
    for (auto& t : theta) t = angle(rng);
    const double v = std::abs(evaluate_lift(lift, theta, delta));
    ++best.evaluations;
    if (v > best.value) {
      best.value = v;
      best.argmax = theta;
    }
  }

  for (std::size_t round = 0; round < refine_rounds; ++round) {
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<double> probe = best.argmax;
      auto g = [&](double x) {
        probe[j] = x;
        return std::abs(evaluate_lift(lift, probe, delta));
      };
      const double centre = best.argmax[j];
      const auto [x, v] = golden_max(g, centre - std::numbers::pi, centre + std::numbers::pi,
                                     best.evaluations);
      if (v > best.value) {
        best.value = v;
        best.argmax[j] = x;
      }
    }
  }
  for (auto& t : best.argmax) {
    t = std::fmod(t, 2.0 * std::numbers::pi);
    if (t < 0.0) t += 2.0 * std::numbers::pi;
  }
  return best;
}

double two_term_sup(Complex b, std::uint64_t q, double delta) {
  if (q < 2) throw ValidationError("two-term: q must be >= 2");
  return 1.0 + std::abs(b) * std::pow(static_cast<double>(q), -delta);
}

double triangle_ceiling(const DirichletPolynomial& phi, double delta) {
  double total = 0.0;
  for (const auto& [n, a] : phi.terms()) total += std::abs(a) * std::pow(static_cast<double>(n), -delta);
  return total;
}

}  // namespace dirichlet
