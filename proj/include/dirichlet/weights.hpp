#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dirichlet/arith.hpp"

namespace dirichlet {

namespace weight_kinds {

struct Constant {};

// w_n = n^{-2 delta}
struct PowerLaw {
  double delta = 0.0;
};

struct Atom {
  double sigma = 0.0;
  double mass = 0.0;
};

// w_n = sum_j mass_j n^{-2 sigma_j}
struct AtomicMeasure {
  std::vector<Atom> atoms;
};

// w_n = prod over p^k || n of value(p, k); value(p, 0) must be 1.
struct MultiplicativeRule {
  std::function<double(std::uint64_t, unsigned)> value;
  std::string label;
};

struct ReciprocalDivisorCount {};
struct ReciprocalDivisorSum {};
struct ReciprocalTotient {};

}  // namespace weight_kinds

using WeightSpec =
    std::variant<weight_kinds::Constant, weight_kinds::PowerLaw,
                 weight_kinds::AtomicMeasure, weight_kinds::MultiplicativeRule,
                 weight_kinds::ReciprocalDivisorCount,
                 weight_kinds::ReciprocalDivisorSum,
                 weight_kinds::ReciprocalTotient>;

// Canonical text: constant | powerlaw:D | atoms:s1:m1,s2:m2 | recip-d |
// recip-sigma | recip-phi | mult:p^k=v,... (unlisted prime powers weigh 1).
WeightSpec parse_weight_spec(std::string_view text);
std::string to_string(const WeightSpec& spec);

// Rule built from an explicit table of prime-power values.
WeightSpec make_prime_power_table(
    std::vector<std::pair<PrimePower, double>> entries);

double weight(const WeightSpec& spec, std::uint64_t n);
double weight(const WeightSpec& spec, const Factorization& f);

// w_{p^k}, evaluated without forming p^k (safe when p^k overflows).
double prime_power_weight(const WeightSpec& spec, std::uint64_t p, unsigned k);

// 1 / w_n and 1 / w_{p^k}; exact integers for the reciprocal variants.
double inverse_weight(const WeightSpec& spec, const Factorization& f);
double prime_power_inverse_weight(const WeightSpec& spec, std::uint64_t p, unsigned k);

// w_1..w_n_max for the atomic form; index 0 is unused and left at 0.
std::vector<double> measure_weights(std::span<const weight_kinds::Atom> atoms,
                                    std::uint64_t n_max);

// True for the variants whose weights are multiplicative with w_1 = 1.
bool is_multiplicative(const WeightSpec& spec);

struct Witness {
  std::uint64_t first = 0;   // p, or n
  std::uint64_t second = 0;  // k, or 0 when unused
  double lhs = 0.0;
  double rhs = 0.0;
};

struct ConditionReport {
  std::string condition;
  bool pass = true;
  std::vector<Witness> witnesses;
  std::vector<std::pair<std::string, double>> parameters;
  std::string note;
};

// Scans w_{p^k} <= p^{-2 delta} w_{p^{k-1}} for primes p <= pmax, 1 <= k <= kmax.
// Equality up to `rel_tol` counts as satisfied.
ConditionReport check_prime_power_decay(const WeightSpec& spec, double delta,
                                        std::uint64_t pmax, unsigned kmax,
                                        double rel_tol = 1e-12);

struct GrowthBound {
  ConditionReport report;
  double constant = 0.0;          // max_{n <= M} w_n^{-1} n^{-2 sigma}
  std::uint64_t argmax = 0;
  double second_half_ratio = 0.0;  // max over (M/2, M] divided by constant
};

GrowthBound check_growth_bound(const WeightSpec& spec, double sigma,
                               std::uint64_t bound);

enum class TailVerdict { kConverging, kDiverging, kInconclusive };

std::string_view to_string(TailVerdict v);

struct TailReport {
  double partial_sum = 0.0;      // S_M
  double increment = 0.0;        // S_M - S_{M/10}
  double previous_increment = 0.0;  // S_{M/10} - S_{M/100}
  double decade_ratio = 0.0;
  TailVerdict verdict = TailVerdict::kInconclusive;
  std::string note;
};

// Ratio threshold below which consecutive decade increments count as decaying.
inline constexpr double kDecadeRatioThreshold = 0.5;

TailVerdict classify_decades(double increment, double previous_increment);

// S_M = sum_{n <= M} w_n^{-1} n^{-2 sigma} with a decade-increment verdict.
TailReport tail_report(const WeightSpec& spec, double sigma, std::uint64_t bound);

}  // namespace dirichlet
