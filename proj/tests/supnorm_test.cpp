#include <doctest.h>

#include <cmath>

#include "dirichlet/error.hpp"
#include "dirichlet/supnorm.hpp"

using namespace dirichlet;

namespace {

DirichletPolynomial partial_zeta(std::uint64_t n_max) {
  DirichletPolynomial f;
  for (std::uint64_t n = 1; n <= n_max; ++n) f.set(n, 1.0);
  return f;
}

}  // namespace

TEST_SUITE("supnorm") {

TEST_CASE("Bohr lift examples") {
  const auto a = bohr_lift({{1, 1.0}, {2, 1.0}});
  CHECK(a.prime_basis == std::vector<std::uint64_t>{2});
  CHECK(a.monomials.size() == 2);
  CHECK(a.monomials.at({0}) == Complex(1.0));
  CHECK(a.monomials.at({1}) == Complex(1.0));

  const auto b = bohr_lift({{6, 1.0}});
  CHECK(b.prime_basis == std::vector<std::uint64_t>{2, 3});
  CHECK(b.monomials.at({1, 1}) == Complex(1.0));

  const auto c = bohr_lift(partial_zeta(12));
  CHECK(c.prime_basis == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
  CHECK(c.monomials.size() == 12);
}

TEST_CASE("lift reconstructs and evaluates consistently") {
  const DirichletPolynomial f{{1, 1.0}, {6, {2.0, -1.0}}, {10, 0.5}, {49, -3.0}};
  CHECK(reconstruct(bohr_lift(f)) == f);
  // theta_j = -t ln p_j puts the torus point on the vertical line.
  const auto lift = bohr_lift(f);
  const double t = 2.7;
  std::vector<double> theta;
  for (auto p : lift.prime_basis) theta.push_back(-t * std::log(static_cast<double>(p)));
  CHECK(std::abs(evaluate_lift(lift, theta, 0.3) - evaluate(f, {0.3, t})) < 1e-12);
}

TEST_CASE("line sup examples") {
  CHECK(sup_on_line({{2, 1.0}}, 1.0, 10.0, 101).value == doctest::Approx(0.5));
  const auto aligned = sup_on_line({{1, 1.0}, {2, 1.0}}, 0.0, 10.0, 101);
  CHECK(aligned.value == 2.0);
  CHECK(aligned.argmax.at(0) == 0.0);

  const auto opposed = sup_on_line({{1, 1.0}, {2, -1.0}}, 0.0, 6.0, 20'001);
  CHECK(opposed.value == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(std::abs(std::abs(opposed.argmax.at(0)) - M_PI / std::log(2.0)) < 1e-2);
}

TEST_CASE("sample floor follows the fastest oscillation") {
  const DirichletPolynomial f{{1, 1.0}, {100, 1.0}};
  const double T = 10.0;
  CHECK(line_sample_floor(f, T) >= static_cast<std::size_t>(16 * 2 * T * std::log(100.0) / (2 * M_PI)));
  CHECK(sup_on_line(f, 0.0, T, 2).evaluations >= line_sample_floor(f, T));
}

TEST_CASE("torus sup examples") {
  const auto a = sup_on_torus(bohr_lift({{1, 1.0}, {2, 1.0}}), 0.0, 100, 2, 1);
  CHECK(a.value == 2.0);
  const auto b = sup_on_torus(bohr_lift({{1, 1.0}, {2, -1.0}}), 0.0, 100, 4, 1);
  CHECK(b.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(b.argmax.at(0) == doctest::Approx(M_PI).epsilon(1e-6));
  const auto c = sup_on_torus(bohr_lift({{1, 1.0}, {2, 1.0}, {3, 1.0}}), 0.0, 100, 2, 1);
  CHECK(c.value == doctest::Approx(3.0));
}

TEST_CASE("torus estimates are deterministic per seed") {
  const auto lift = bohr_lift({{1, 1.0}, {2, {0.3, 0.4}}, {3, -0.7}, {5, {0.0, 1.1}}});
  const auto a = sup_on_torus(lift, 0.2, 500, 3, 42);
  const auto b = sup_on_torus(lift, 0.2, 500, 3, 42);
  CHECK(a.value == b.value);
  CHECK(a.argmax == b.argmax);
  CHECK(a.seed == 42);
}

TEST_CASE("torus dominates the line") {
  const DirichletPolynomial f{{1, 1.0}, {2, {0.3, 0.4}}, {3, -0.7}, {6, {0.0, 1.1}}};
  for (double delta : {0.0, 0.5, 1.0}) {
    const double line = sup_on_line(f, delta, 50.0, 20'001).value;
    const double torus = sup_on_torus(bohr_lift(f), delta, 2000, 4, 0).value;
    CHECK(torus + 1e-9 >= line);
  }
}

TEST_CASE("estimates are nonincreasing in delta") {
  const DirichletPolynomial f{{1, 1.0}, {2, -0.5}, {3, {0.0, 0.8}}};
  double last_line = INFINITY;
  double last_two = INFINITY;
  for (double delta : {0.0, 0.25, 0.5, 1.0, 2.0}) {
    const double line = sup_on_line(f, delta, 30.0, 5001).value;
    const double two = two_term_sup(-0.5, 2, delta);
    CHECK(line <= last_line + 1e-12);
    CHECK(two <= last_two);
    last_line = line;
    last_two = two;
  }
}

TEST_CASE("triangle ceiling") {
  const DirichletPolynomial pos{{1, 1.0}, {2, 2.0}, {5, 0.5}};
  const double ceiling = triangle_ceiling(pos, 0.5);
  CHECK(ceiling == doctest::Approx(1.0 + 2.0 / std::sqrt(2.0) + 0.5 / std::sqrt(5.0)));
  // Nonnegative coefficients attain the ceiling at theta = 0.
  CHECK(sup_on_torus(bohr_lift(pos), 0.5, 10, 1, 0).value == doctest::Approx(ceiling));
  const DirichletPolynomial mixed{{1, 1.0}, {2, {0.0, -2.0}}, {3, -0.5}};
  CHECK(sup_on_line(mixed, 0.1, 40.0, 10'001).value <= triangle_ceiling(mixed, 0.1) + 1e-12);
  CHECK(sup_on_torus(bohr_lift(mixed), 0.1, 1000, 4, 0).value <= triangle_ceiling(mixed, 0.1) + 1e-12);
}

TEST_CASE("two-term closed form") {
  CHECK(two_term_sup(1.0, 2, 0.0) == 2.0);
  CHECK(two_term_sup(-3.0, 2, 1.0) == doctest::Approx(2.5));
  CHECK(two_term_sup(1.0, 3, 0.5) == doctest::Approx(1.0 + 1.0 / std::sqrt(3.0)));
  CHECK_THROWS_AS(two_term_sup(1.0, 1, 0.0), ValidationError);
  for (Complex b : {Complex(1.0, 0.0), Complex(-0.4, 0.9), Complex(0.0, -2.0)}) {
    for (std::uint64_t q : {2ULL, 4ULL, 9ULL}) {
      const double torus = sup_on_torus(bohr_lift({{1, 1.0}, {q, b}}), 0.3, 200, 4, 0).value;
      CHECK(std::abs(torus - two_term_sup(b, q, 0.3)) < 1e-9);
    }
  }
}

}  // TEST_SUITE
