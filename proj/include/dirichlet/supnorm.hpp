#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "dirichlet/series.hpp"

namespace dirichlet {

// Substitution p_j^{-s} -> z_j: one exponent per basis prime per monomial.
struct BohrLift {
  std::vector<std::uint64_t> prime_basis;
  std::map<std::vector<unsigned>, Complex> monomials;
};

BohrLift bohr_lift(const DirichletPolynomial& phi);
DirichletPolynomial reconstruct(const BohrLift& lift);

// Value at z_j = p_j^{-delta} e^{i theta_j}.
Complex evaluate_lift(const BohrLift& lift, std::span<const double> theta, double delta);

// Lower estimate of a supremum, with where it was found and the work spent.
struct SupEstimate {
  double value = 0.0;
  std::vector<double> argmax;  // {t} on a line, theta on the torus
  std::size_t evaluations = 0;
  std::uint64_t seed = 0;
};

// 16 samples per period 2 pi / ln(q_max) over [-T, T].
std::size_t line_sample_floor(const DirichletPolynomial& phi, double T);

// max |phi(delta + it)| over t = 0 and a uniform grid on [-T, T] with
// max(samples, line_sample_floor) points.
SupEstimate sup_on_line(const DirichletPolynomial& phi, double delta, double T,
                        std::size_t samples);

// theta = 0, then `budget` uniform random angles from the seed, then
// `refine_rounds` cycles of per-coordinate golden-section search.
SupEstimate sup_on_torus(const BohrLift& lift, double delta, std::size_t budget,
                         std::size_t refine_rounds, std::uint64_t seed = 0);

// sup over Omega_delta of |1 + b q^{-s}|
double two_term_sup(Complex b, std::uint64_t q, double delta);

// sum |a_n| n^{-delta}: a certified upper bound on the half-plane sup.
double triangle_ceiling(const DirichletPolynomial& phi, double delta);

}  // namespace dirichlet
