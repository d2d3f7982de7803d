#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dirichlet/series.hpp"
#include "dirichlet/weights.hpp"

namespace dirichlet {

// A truncated kernel value. When `rigorous`, the exact value lies within
// `tail_bound` of `value` (truncation plus a floating-point allowance); otherwise the bound rests on an empirical growth
// constant.
struct KernelEstimate {
  Complex value{};
  double tail_bound = 0.0;
  std::size_t terms_used = 0;
  bool rigorous = true;
  bool divergence_warning = false;
};

struct KernelOptions {
  // Exponent used for the empirical bound w_n^{-1} <= C n^{2 sigma} when no
  // closed-form majorant is known for the spec.
  double growth_sigma = 0.25;
};

// sum_{n <= M} w_n^{-1} n^{-tau}, tau = u + conj(z).
KernelEstimate kernel_direct(const WeightSpec& spec, Complex u, Complex z, std::uint64_t bound,
                             const KernelOptions& options = {});

// Same sum restricted to n smooth over the first `prime_count` primes.
KernelEstimate kernel_projected(const WeightSpec& spec, Complex u, Complex z,
                                std::size_t prime_count, std::uint64_t bound,
                                const KernelOptions& options = {});

// ceil(40 / ln p)
unsigned default_local_cap(std::uint64_t p);

// prod over the first `prime_count` primes of sum_{j <= kmax} w_{p^j}^{-1} p^{-j tau}.
// kmax defaults per prime to default_local_cap(p).
KernelEstimate kernel_euler(const WeightSpec& spec, Complex u, Complex z, std::size_t prime_count,
                            std::optional<unsigned> kmax = std::nullopt);

// k^w / k^0 as prod_p (1 + sum_{1 <= j <= kmax} (w_{p^j}^{-1} - w_{p^{j-1}}^{-1}) p^{-j tau}).
Complex kernel_ratio(const WeightSpec& spec, Complex u, Complex z, std::size_t prime_count,
                     std::optional<unsigned> kmax = std::nullopt);

// Coefficients w_n^{-1} n^{-conj(u)} over `indices`: the kernel at u truncated
// to those indices.
DirichletPolynomial kernel_vector(const WeightSpec& spec, Complex u,
                                  std::span<const std::uint64_t> indices);

using KernelFunction = std::function<Complex(Complex, Complex)>;

struct GramSpectrum {
  double min_eigenvalue = 0.0;
  double max_abs_eigenvalue = 0.0;
};

// Eigenvalue extremes of the Hermitized matrix [kernel(p_i, p_j)].
// Rejects repeated points.
GramSpectrum gram_spectrum(const KernelFunction& kernel, std::span<const Complex> points);
double gram_min_eigenvalue(const KernelFunction& kernel, std::span<const Complex> points);

}  // namespace dirichlet
