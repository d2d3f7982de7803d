#include <doctest.h>

#include <cmath>
#include <random>

#include "dirichlet/arith.hpp"
#include "dirichlet/error.hpp"
#include "dirichlet/kernels.hpp"

using namespace dirichlet;
namespace wk = dirichlet::weight_kinds;

namespace {

const double kZeta2 = M_PI * M_PI / 6.0;

bool within_tails(const KernelEstimate& a, const KernelEstimate& b) {
  return std::abs(a.value - b.value) <= a.tail_bound + b.tail_bound;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("direct kernel examples") {
  const auto k = kernel_direct(wk::Constant{}, 1.0, 1.0, 100'000);
  CHECK(k.rigorous);
  CHECK(std::abs(k.value - kZeta2) < 1e-4);
  CHECK(std::abs(k.value - kZeta2) <= k.tail_bound);
  CHECK(k.terms_used == 100'000);

  const auto shifted = kernel_direct(wk::Constant{}, {1.0, 5.0}, {1.0, 5.0}, 100'000);
  CHECK(shifted.value == k.value);

  const auto power = kernel_direct(wk::PowerLaw{0.25}, {2.0, 1.0}, {1.5, -0.5}, 1000);
  const auto shifted_constant = kernel_direct(wk::Constant{}, {2.0 - 0.5, 1.0}, {1.5, -0.5}, 1000);
  CHECK(std::abs(power.value - shifted_constant.value) < 1e-12);
}

TEST_CASE("divergent direct sums are flagged") {
  CHECK(kernel_direct(wk::Constant{}, 0.25, 0.25, 100'000).divergence_warning);
  CHECK_FALSE(kernel_direct(wk::Constant{}, 1.0, 1.0, 100'000).divergence_warning);
}

TEST_CASE("Hermitian symmetry is exact") {
  const Complex u{1.3, 2.0};
  const Complex z{0.9, -7.5};
  for (const char* text : {"constant", "recip-d", "recip-sigma", "powerlaw:0.2"}) {
    const auto spec = parse_weight_spec(text);
    CHECK(kernel_direct(spec, u, z, 500).value == std::conj(kernel_direct(spec, z, u, 500).value));
    CHECK(kernel_projected(spec, u, z, 3, 5000).value ==
          std::conj(kernel_projected(spec, z, u, 3, 5000).value));
  }
}

TEST_CASE("projected kernel examples") {
  const auto one = kernel_projected(wk::Constant{}, 1.0, 1.0, 1, 1ULL << 20);
  CHECK(std::abs(one.value - 4.0 / 3.0) <= one.tail_bound + 1e-15);
  CHECK(one.tail_bound < 1e-10);
  const auto two = kernel_projected(wk::Constant{}, 1.0, 1.0, 2, 1ULL << 40);
  CHECK(std::abs(two.value - 1.5) <= two.tail_bound);
  CHECK(two.tail_bound < 1e-8);

  // All primes <= M present: same index set as the direct sum.
  for (const char* text : {"constant", "recip-d", "recip-phi"}) {
    const auto spec = parse_weight_spec(text);
    const auto p = kernel_projected(spec, 1.5, 1.0, 25, 100);  // 25 primes reach 97
    const auto d = kernel_direct(spec, 1.5, 1.0, 100);
    CHECK(std::abs(p.value - d.value) < 1e-14);
  }
}

TEST_CASE("projected kernel is nondecreasing in N for real tau") {
  for (const char* text : {"constant", "recip-d", "recip-sigma"}) {
    const auto spec = parse_weight_spec(text);
    double last = 0.0;
    for (std::size_t n = 1; n <= 6; ++n) {
      const double v = kernel_projected(spec, 1.25, 1.25, n, 1'000'000).value.real();
      CHECK(v >= last);
      last = v;
    }
  }
}

TEST_CASE("Euler product examples") {
  const auto e = kernel_euler(wk::Constant{}, 1.0, 1.0, 2);
  CHECK(std::abs(e.value - 1.5) <= e.tail_bound + 1e-15);

  double last = 0.0;
  for (std::size_t n = 1; n <= 20; ++n) {
    const double v = kernel_euler(wk::Constant{}, 1.0, 1.0, n).value.real();
    CHECK(v > last);
    CHECK(v < kZeta2);
    last = v;
  }

  const auto d_euler = kernel_euler(wk::ReciprocalDivisorCount{}, 1.5, 1.5, 3);
  const auto d_proj = kernel_projected(wk::ReciprocalDivisorCount{}, 1.5, 1.5, 3, 1'000'000);
  CHECK(std::abs(d_euler.value - d_proj.value) < 1e-8);
  CHECK(within_tails(d_euler, d_proj));

  CHECK_THROWS_AS(kernel_euler(parse_weight_spec("atoms:0:0.5,1:0.5"), 1.0, 1.0, 2), ValidationError);
}

TEST_CASE("Euler and projected agree within combined tails") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> im(-10.0, 10.0);
  for (const char* text : {"constant", "powerlaw:0.25", "recip-d", "recip-sigma", "recip-phi"}) {
    const auto spec = parse_weight_spec(text);
    for (double re : {2.5, 3.0, 4.0}) {
      for (std::size_t n = 1; n <= 5; ++n) {
        const Complex u{re / 2, im(rng)};
        const Complex z{re / 2, im(rng)};
        const auto e = kernel_euler(spec, u, z, n);
        const auto p = kernel_projected(spec, u, z, n, 1ULL << 40);
        CAPTURE(text);
        CAPTURE(re);
        CAPTURE(n);
        CHECK(e.rigorous);
        CHECK(p.rigorous);
        CHECK(within_tails(e, p));
      }
    }
  }
}

TEST_CASE("kernel ratio") {
  CHECK(std::abs(kernel_ratio(wk::Constant{}, {1.0, 2.0}, {0.8, -1.0}, 10) - 1.0) < 1e-12);

  const Complex q = kernel_ratio(wk::ReciprocalDivisorCount{}, 1.5, 1.5, 3);
  const Complex quotient = kernel_euler(wk::ReciprocalDivisorCount{}, 1.5, 1.5, 3).value /
                           kernel_euler(wk::Constant{}, 1.5, 1.5, 3).value;
  CHECK(std::abs(q - quotient) < 1e-10);

  // w_n^{-1} = n^{1/2}: k^w(tau) = k^0(tau - 1/2).
  const Complex p = kernel_ratio(wk::PowerLaw{0.25}, 1.5, 1.5, 4);
  const Complex shift = kernel_euler(wk::Constant{}, 1.25, 1.25, 4).value /
                        kernel_euler(wk::Constant{}, 1.5, 1.5, 4).value;
  CHECK(std::abs(p - shift) < 1e-10);

  CHECK_THROWS_AS(kernel_ratio(parse_weight_spec("atoms:0:2"), 1.0, 1.0, 2), ValidationError);
}

TEST_CASE("reproducing identity on a finite smooth set") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  const auto indices = smooth_numbers(3, 500);
  for (const char* text : {"constant", "recip-d", "recip-sigma", "powerlaw:0.3"}) {
    const auto spec = parse_weight_spec(text);
    DirichletPolynomial f;
    for (auto n : indices) f.set(n, {g(rng), g(rng)});
    const Complex u{0.7, 3.1};
    const Complex lhs = hw_inner(f, kernel_vector(spec, u, indices), spec);
    CHECK(std::abs(lhs - evaluate(f, u)) < 1e-11 * (1 + std::abs(evaluate(f, u))));
  }
}

TEST_CASE("Gram matrices") {
  const KernelFunction k0 = [](Complex a, Complex b) {
    return kernel_euler(wk::Constant{}, a, b, 6).value;
  };
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> re(1.0, 3.0);
  std::uniform_real_distribution<double> im(-5.0, 5.0);
  std::vector<Complex> points;
  for (int i = 0; i < 5; ++i) points.push_back({re(rng), im(rng)});
  const auto g = gram_spectrum(k0, points);
  CHECK(g.min_eigenvalue >= -1e-10 * g.max_abs_eigenvalue);

  const KernelFunction kd = [](Complex a, Complex b) {
    return kernel_ratio(wk::ReciprocalDivisorCount{}, a, b, 6);
  };
  const auto gd = gram_spectrum(kd, points);
  CHECK(gd.min_eigenvalue >= -1e-10 * gd.max_abs_eigenvalue);

  std::vector<Complex> duplicate{1.0, 2.0, 1.0};
  CHECK_THROWS_AS(gram_spectrum(k0, duplicate), ValidationError);
}

TEST_CASE("increasing weight at p = 2 breaks positivity of K") {
  // Pair found by an independent grid search over real points in [0.55, 4].
  const auto spec = make_prime_power_table({{{2, 1}, 2.0}});
  const KernelFunction k = [&](Complex a, Complex b) { return kernel_ratio(spec, a, b, 1); };
  const std::vector<Complex> pair{0.55, 4.0};
  CHECK(gram_min_eigenvalue(k, pair) == doctest::Approx(-0.04467209918173626).epsilon(1e-9));
}

}  // TEST_SUITE
