#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace dirichlet {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n = prod p^a over `factors`; primes strictly increasing, exponents >= 1.
struct Factorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;
};

// Smallest-prime-factor table plus the prime list up to `bound`.
// Numbers up to bound^2 can be factored by trial division over the list.
class Sieve {
 public:
  static constexpr std::uint32_t kDefaultBound = 1'000'000;

  explicit Sieve(std::uint32_t bound = kDefaultBound);

  std::uint32_t bound() const { return bound_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  bool is_prime(std::uint64_t n) const;

  Factorization factorize(std::uint64_t n) const;

 private:
  std::uint32_t bound_;
  std::vector<std::uint32_t> smallest_factor_;
  std::vector<std::uint64_t> primes_;
};

// Process-wide sieve with the default bound; built once, read-only after.
const Sieve& default_sieve();

Factorization factorize(std::uint64_t n);

std::uint64_t divisor_count(const Factorization& f);
std::uint64_t divisor_sum(const Factorization& f);
std::uint64_t totient(const Factorization& f);
std::uint64_t divisor_count(std::uint64_t n);
std::uint64_t divisor_sum(std::uint64_t n);
std::uint64_t totient(std::uint64_t n);

// The first k primes.
std::vector<std::uint64_t> primes(std::size_t k);

// All n <= bound whose prime factors lie among the first `prime_count`
// primes, ascending, 1 included.
std::vector<std::uint64_t> smooth_numbers(std::size_t prime_count,
                                          std::uint64_t bound);

// Same set, each element with its factorization (ascending by value).
std::vector<Factorization> smooth_factorizations(std::size_t prime_count,
                                                 std::uint64_t bound);

// True iff every prime factor of n is among the first `prime_count` primes.
bool is_smooth(std::uint64_t n, std::size_t prime_count);

struct MultiplicativityCounterexample {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  double product_value = 0.0;  // w(mn)
  double value_product = 0.0;  // w(m) w(n)
};

struct MultiplicativityReport {
  bool pass = true;
  bool complete = false;
  std::uint64_t bound = 0;
  std::size_t pairs_checked = 0;
  std::optional<MultiplicativityCounterexample> counterexample;
};

// Scans pairs (m, n) in 1..bound in lexicographic order (coprime pairs only
// unless `complete`) and stops at the first pair where w(mn) and w(m)w(n)
// differ by more than `rel_tol` relative.
MultiplicativityReport multiplicativity_report(
    const std::function<double(std::uint64_t)>& w, std::uint64_t bound,
    bool complete, double rel_tol = 1e-12);

}  // namespace dirichlet
