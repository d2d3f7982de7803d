#include "dirichlet/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "dirichlet/arith.hpp"
#include "dirichlet/error.hpp"

namespace dirichlet {

namespace wk = weight_kinds;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool needs_factorization(const WeightSpec& spec) {
  return !(std::holds_alternative<wk::Constant>(spec) ||
           std::holds_alternative<wk::PowerLaw>(spec) ||
           std::holds_alternative<wk::AtomicMeasure>(spec));
}

Factorization factor_for(const WeightSpec& spec, std::uint64_t n) {
  return needs_factorization(spec) ? factorize(n) : Factorization{n, {}};
}

// w_n^{-1} <= constant * n^{exponent} * c_n, where c_n = 1 (count_power 1)
// or c_n = d(n) (count_power 2, handled through the squared counting bound).
struct Majorant {
  double constant = 1.0;
  double exponent = 0.0;
  int count_power = 1;
  bool rigorous = true;
};

// Closed-form majorant on all of N, if one is known.
std::optional<Majorant> full_range_majorant(const WeightSpec& spec) {
  if (std::holds_alternative<wk::Constant>(spec)) return Majorant{};
  if (const auto* s = std::get_if<wk::PowerLaw>(&spec)) return Majorant{1.0, 2.0 * s->delta};
  if (const auto* s = std::get_if<wk::AtomicMeasure>(&spec)) {
    const auto best = std::min_element(s->atoms.begin(), s->atoms.end(),
                                       [](const wk::Atom& a, const wk::Atom& b) {
                                         return a.sigma < b.sigma ||
                                                (a.sigma == b.sigma && a.mass > b.mass);
                                       });
    return Majorant{1.0 / best->mass, 2.0 * best->sigma};
  }
  if (std::holds_alternative<wk::ReciprocalTotient>(spec)) return Majorant{1.0, 1.0};
  return std::nullopt;
}

// Closed-form majorant valid on integers smooth over `basis`.
std::optional<Majorant> smooth_majorant(const WeightSpec& spec,
                                        const std::vector<std::uint64_t>& basis) {
  if (std::holds_alternative<wk::ReciprocalDivisorCount>(spec)) return Majorant{1.0, 0.0, 2};
  if (std::holds_alternative<wk::ReciprocalDivisorSum>(spec)) {
    // sigma(n)/n < prod_{p | n} p/(p-1)
    double c = 1.0;
    for (std::uint64_t p : basis) c *= static_cast<double>(p) / static_cast<double>(p - 1);
    return Majorant{c, 1.0};
  }
  return full_range_majorant(spec);
}

// sum_{n > M} n^{-(a)} <= int_M^inf x^{-a} dx
double integer_tail(double constant, double a, std::uint64_t bound) {
  if (!(a > 1.0)) return kInf;
  const double m = static_cast<double>(bound);
  return constant * std::exp((1.0 - a) * std::log(m)) / (a - 1.0);
}

// Tail over smooth n > M of c_n n^{-a}, with sum_{n <= x} c_n <= Q(ln x)^k and
// Q(y) = prod (1 + y / ln p). Abel summation gives a * int_{ln M}^inf Q^k e^{-a y} dy.
double smooth_tail(double constant, double a, int count_power,
                   const std::vector<std::uint64_t>& basis, std::uint64_t bound) {
  if (!(a > 0.0)) return kInf;
  std::vector<double> poly{1.0};
  for (int rep = 0; rep < count_power; ++rep) {
    for (std::uint64_t p : basis) {
      const double inv = 1.0 / std::log(static_cast<double>(p));
      std::vector<double> next(poly.size() + 1, 0.0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i];
        next[i + 1] += poly[i] * inv;
      }
      poly = std::move(next);
    }
  }
  const double L = std::log(static_cast<double>(bound));
  // I_m = int_L^inf y^m e^{-a y} dy = e^{-aL} sum_{i<=m} (m!/i!) L^i / a^{m-i+1}
  double total = 0.0;
  for (std::size_t m = 0; m < poly.size(); ++m) {
    double inner = 0.0;
    double ratio = 1.0;  // m!/i! for i = m, m-1, ...
    for (std::size_t back = 0; back <= m; ++back) {
      const std::size_t i = m - back;
      inner += ratio * std::pow(L, static_cast<double>(i)) / std::pow(a, static_cast<double>(back + 1));
      ratio *= static_cast<double>(i);
    }
    total += poly[m] * inner;
  }
  return constant * a * std::exp(-a * L) * total;
}

std::vector<std::uint64_t> first_primes(std::size_t count) { return primes(count); }

// Generous bound on the rounding error of a sum of `count` computed terms:
// a few ulps per term evaluation (exp/log/pow) plus recursive summation.
double rounding_allowance(std::size_t count, double abs_sum) {
  return 8.0 * static_cast<double>(count + 1) * std::numeric_limits<double>::epsilon() * abs_sum;
}

}  // namespace

KernelEstimate kernel_direct(const WeightSpec& spec, Complex u, Complex z, std::uint64_t bound,
                             const KernelOptions& options) {
  if (bound == 0) throw ValidationError("kernel: M must be >= 1");
  const Complex tau = u + std::conj(z);
  const double re = tau.real();
  KernelEstimate out;

  const auto majorant = full_range_majorant(spec);
  double growth_constant = 0.0;
  double abs_sum = 0.0;
  double at_tenth = 0.0;
  double at_hundredth = 0.0;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    const double inv_w = inverse_weight(spec, factor_for(spec, n));
    const Complex term = inv_w * inverse_power(n, tau);
    out.value += term;
    abs_sum += std::abs(term);
    if (n == bound / 10) at_tenth = abs_sum;
    if (n == bound / 100) at_hundredth = abs_sum;
    if (!majorant) {
      growth_constant = std::max(
          growth_constant, inv_w * std::pow(static_cast<double>(n), -2.0 * options.growth_sigma));
    }
  }
  out.terms_used = bound;

  if (majorant) {
    out.tail_bound = integer_tail(majorant->constant, re - majorant->exponent, bound);
  } else {
    out.rigorous = false;
    out.tail_bound = integer_tail(growth_constant, re - 2.0 * options.growth_sigma, bound);
  }
  out.tail_bound += rounding_allowance(bound, abs_sum);
  if (bound >= 100) {
    out.divergence_warning =
        classify_decades(abs_sum - at_tenth, at_tenth - at_hundredth) == TailVerdict::kDiverging;
  }
  if (!std::isfinite(out.tail_bound)) out.divergence_warning = true;
  return out;
}

KernelEstimate kernel_projected(const WeightSpec& spec, Complex u, Complex z,
                                std::size_t prime_count, std::uint64_t bound,
                                const KernelOptions& options) {
  const Complex tau = u + std::conj(z);
  const double re = tau.real();
  const auto basis = first_primes(prime_count);
  const auto indices = smooth_factorizations(prime_count, bound);
  KernelEstimate out;

  const auto majorant = smooth_majorant(spec, basis);
  double growth_constant = 0.0;
  double abs_sum = 0.0;
  for (const auto& f : indices) {
    const double inv_w = inverse_weight(spec, f);
    const Complex term = inv_w * inverse_power(f.value, tau);
    out.value += term;
    abs_sum += std::abs(term);
    if (!majorant) {
      growth_constant = std::max(
          growth_constant,
          inv_w * std::pow(static_cast<double>(f.value), -2.0 * options.growth_sigma));
    }
  }
  out.terms_used = indices.size();

  if (majorant) {
    out.tail_bound = smooth_tail(majorant->constant, re - majorant->exponent,
                                 majorant->count_power, basis, bound);
  } else {
    out.rigorous = false;
    out.tail_bound =
        smooth_tail(growth_constant, re - 2.0 * options.growth_sigma, 1, basis, bound);
  }
  out.tail_bound += rounding_allowance(indices.size(), abs_sum);
  out.divergence_warning = !std::isfinite(out.tail_bound);
  return out;
}

unsigned default_local_cap(std::uint64_t p) {
  return static_cast<unsigned>(std::ceil(40.0 / std::log(static_cast<double>(p))));
}

namespace {

// Bound on sum_{j > kmax} |w_{p^j}^{-1} p^{-j tau}|, or nullopt when only a
// heuristic is available.
std::optional<double> local_tail(const WeightSpec& spec, std::uint64_t p, double re,
                                 unsigned kmax) {
  const double lp = std::log(static_cast<double>(p));
  const auto geometric = [&](double log_ratio, double scale) {
    if (!(log_ratio < 0.0)) return kInf;
    const double r = std::exp(log_ratio);
    return scale * std::exp((kmax + 1.0) * log_ratio) / (1.0 - r);
  };
  if (std::holds_alternative<wk::Constant>(spec)) return geometric(-re * lp, 1.0);
  if (const auto* s = std::get_if<wk::PowerLaw>(&spec)) {
    return geometric((2.0 * s->delta - re) * lp, 1.0);
  }
  if (const auto* s = std::get_if<wk::AtomicMeasure>(&spec)) {
    return geometric((2.0 * s->atoms.front().sigma - re) * lp, 1.0);
  }
  if (std::holds_alternative<wk::ReciprocalDivisorCount>(spec)) {
    // sum_{j >= m} (j+1) r^j = r^m ((m+1) - m r) / (1-r)^2
    if (!(re > 0.0)) return kInf;
    const double r = std::exp(-re * lp);
    const double m = kmax + 1.0;
    return std::exp(m * -re * lp) * ((m + 1.0) - m * r) / ((1.0 - r) * (1.0 - r));
  }
  if (std::holds_alternative<wk::ReciprocalDivisorSum>(spec)) {
    // sigma(p^j) <= p^j p/(p-1)
    const double pd = static_cast<double>(p);
    return geometric((1.0 - re) * lp, pd / (pd - 1.0));
  }
  if (std::holds_alternative<wk::ReciprocalTotient>(spec)) return geometric((1.0 - re) * lp, 1.0);
  return std::nullopt;
}

void require_multiplicative(const WeightSpec& spec, const char* who) {
  if (!is_multiplicative(spec)) {
    throw ValidationError(std::string(who) + ": spec " + to_string(spec) +
                          " is not multiplicative with w_1 = 1");
  }
}

}  // namespace

KernelEstimate kernel_euler(const WeightSpec& spec, Complex u, Complex z, std::size_t prime_count,
                            std::optional<unsigned> kmax) {
  require_multiplicative(spec, "kernel_euler");
  if (prime_count == 0) throw ValidationError("kernel_euler: N must be >= 1");
  const Complex tau = u + std::conj(z);
  KernelEstimate out;
  out.value = 1.0;
  double magnitude_product = 1.0;
  double padded_product = 1.0;
  for (std::uint64_t p : first_primes(prime_count)) {
    const unsigned cap = kmax.value_or(default_local_cap(p));
    Complex local{};
    double local_abs = 0.0;
    double previous_abs = 0.0;
    double last_abs = 0.0;
    for (unsigned j = 0; j <= cap; ++j) {
      const Complex term =
          prime_power_inverse_weight(spec, p, j) * std::exp(-static_cast<double>(j) * tau *
                                                            std::log(static_cast<double>(p)));
      local += term;
      local_abs += std::abs(term);
      previous_abs = last_abs;
      last_abs = std::abs(term);
      ++out.terms_used;
    }
    double tail = 0.0;
    if (const auto bound = local_tail(spec, p, tau.real(), cap)) {
      tail = *bound;
    } else {
      // Continue the last observed ratio geometrically.
      out.rigorous = false;
      const double ratio = previous_abs > 0.0 ? last_abs / previous_abs : 0.0;
      tail = ratio < 1.0 ? last_abs * ratio / (1.0 - ratio) : kInf;
    }
    tail += rounding_allowance(cap + 1, local_abs);
    out.value *= local;
    magnitude_product *= std::abs(local);
    padded_product *= std::abs(local) + tail;
  }
  out.tail_bound = padded_product - magnitude_product +
                   rounding_allowance(prime_count, padded_product);
  out.divergence_warning = !std::isfinite(out.tail_bound);
  return out;
}

Complex kernel_ratio(const WeightSpec& spec, Complex u, Complex z, std::size_t prime_count,
                     std::optional<unsigned> kmax) {
  require_multiplicative(spec, "kernel_ratio");
  if (weight(spec, 1) != 1.0) throw ValidationError("kernel_ratio: requires w_1 = 1");
  const Complex tau = u + std::conj(z);
  Complex product = 1.0;
  for (std::uint64_t p : first_primes(prime_count)) {
    const unsigned cap = kmax.value_or(default_local_cap(p));
    const double lp = std::log(static_cast<double>(p));
    Complex local = 1.0;
    double previous = prime_power_inverse_weight(spec, p, 0);
    for (unsigned j = 1; j <= cap; ++j) {
      const double current = prime_power_inverse_weight(spec, p, j);
      const double coefficient = current - previous;
      if (coefficient != 0.0) local += coefficient * std::exp(-static_cast<double>(j) * tau * lp);
      previous = current;
    }
    product *= local;
  }
  return product;
}

DirichletPolynomial kernel_vector(const WeightSpec& spec, Complex u,
                                  std::span<const std::uint64_t> indices) {
  DirichletPolynomial out;
  const Complex ubar = std::conj(u);
  for (std::uint64_t n : indices) {
    out.set(n, inverse_weight(spec, factor_for(spec, n)) * inverse_power(n, ubar));
  }
  return out;
}

GramSpectrum gram_spectrum(const KernelFunction& kernel, std::span<const Complex> points) {
  const auto size = static_cast<Eigen::Index>(points.size());
  if (size == 0) throw ValidationError("gram: no points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) throw ValidationError("gram: repeated point");
    }
  }
  Eigen::MatrixXcd gram(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      gram(i, j) = kernel(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
    }
  }
  const Eigen::MatrixXcd hermitian = 0.5 * (gram + gram.adjoint());
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
  const auto& eig = solver.eigenvalues();
  return {eig.minCoeff(), eig.cwiseAbs().maxCoeff()};
}

double gram_min_eigenvalue(const KernelFunction& kernel, std::span<const Complex> points) {
  return gram_spectrum(kernel, points).min_eigenvalue;
}

}  // namespace dirichlet
