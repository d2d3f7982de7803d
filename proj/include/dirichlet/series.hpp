#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "dirichlet/weights.hpp"

namespace dirichlet {

using Complex = std::complex<double>;

// Finitely supported sum_n a_n n^{-s}. Exact zeros are never stored.
class DirichletPolynomial {
 public:
  using Terms = std::map<std::uint64_t, Complex>;

  DirichletPolynomial() = default;
  DirichletPolynomial(std::initializer_list<std::pair<const std::uint64_t, Complex>> terms);

  // Sets a_n; a zero value removes the term.
  void set(std::uint64_t n, Complex value);
  void add(std::uint64_t n, Complex value);
  Complex coefficient(std::uint64_t n) const;

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::uint64_t max_index() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  DirichletPolynomial scaled(Complex c) const;
  friend DirichletPolynomial operator+(const DirichletPolynomial& a, const DirichletPolynomial& b);
  friend DirichletPolynomial operator-(const DirichletPolynomial& a, const DirichletPolynomial& b);
  friend bool operator==(const DirichletPolynomial&, const DirichletPolynomial&) = default;

 private:
  Terms terms_;
};

// n^{-s} = exp(-s ln n), with conj(s) giving exactly the conjugate value.
Complex inverse_power(std::uint64_t n, Complex s);

Complex evaluate(const DirichletPolynomial& f, Complex s);

inline constexpr std::size_t kDefaultMaxProductTerms = 100'000'000;

// Dirichlet convolution c_k = sum_{d | k} a_d b_{k/d}. Throws ValidationError
// if the pairwise product count exceeds `max_terms` or an index overflows.
DirichletPolynomial multiply(const DirichletPolynomial& f, const DirichletPolynomial& g,
                             std::size_t max_terms = kDefaultMaxProductTerms);

// Keeps the terms whose index is smooth over the first `prime_count` primes.
DirichletPolynomial project_smooth(const DirichletPolynomial& f, std::size_t prime_count);

// <f, g>_w = sum a_n conj(b_n) w_n
Complex hw_inner(const DirichletPolynomial& f, const DirichletPolynomial& g,
                 const WeightSpec& spec);
double hw_norm(const DirichletPolynomial& f, const WeightSpec& spec);

// Trapezoid value of (1/2T) int_{-T}^{T} f(sigma0 + it) x^{sigma0 + it} dt.
Complex recover_coefficient(const DirichletPolynomial& f, double sigma0, double x, double T,
                            std::size_t steps);

// Steps giving `per_oscillation` samples per period of the fastest
// frequency |ln(n/x)| present in the integrand, over the whole window.
std::size_t recovery_steps(const DirichletPolynomial& f, double x, double T,
                           double per_oscillation = 16.0);

// Sum over the support of |a_n| (x/n)^{sigma0} / (T |ln(x/n)|), n != x: the
// envelope of the exact integral's deviation from the matching coefficient.
double recovery_error_envelope(const DirichletPolynomial& f, double sigma0, double x, double T);

// Text form "n1:re,im;n2:re,im" (",im" optional) and JSON array form
// [{"n":2,"re":1.0,"im":0.0}].
DirichletPolynomial parse_polynomial(std::string_view text);
DirichletPolynomial parse_polynomial_json(std::string_view json_text);
std::string to_string(const DirichletPolynomial& f);

}  // namespace dirichlet
