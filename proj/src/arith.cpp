#include "dirichlet/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dirichlet/error.hpp"

namespace dirichlet {

Sieve::Sieve(std::uint32_t bound) : bound_(std::max<std::uint32_t>(bound, 2)) {
  smallest_factor_.assign(static_cast<std::size_t>(bound_) + 1, 0);
  smallest_factor_[1] = 1;
  for (std::uint32_t i = 2; i <= bound_; ++i) {
    if (smallest_factor_[i] == 0) {
      smallest_factor_[i] = i;
      primes_.push_back(i);
    }
    for (std::uint64_t p : primes_) {
      const std::uint64_t next = p * i;
      if (p > smallest_factor_[i] || next > bound_) break;
      smallest_factor_[next] = static_cast<std::uint32_t>(p);
    }
  }
}

bool Sieve::is_prime(std::uint64_t n) const {
  if (n < 2) return false;
  if (n <= bound_) return smallest_factor_[n] == n;
  const auto f = factorize(n);
  return f.factors.size() == 1 && f.factors[0].exponent == 1;
}

Factorization Sieve::factorize(std::uint64_t n) const {
  if (n == 0) throw ValidationError("factorize: n must be positive");
  const std::uint64_t limit = static_cast<std::uint64_t>(bound_) * bound_;
  if (n > limit) {
    throw ValidationError("factorize: n = " + std::to_string(n) +
                          " exceeds sieve bound squared (" +
                          std::to_string(limit) + ")");
  }

  Factorization out;
  out.value = n;
  auto push = [&out](std::uint64_t p) {
    if (!out.factors.empty() && out.factors.back().prime == p) {
      ++out.factors.back().exponent;
    } else {
      out.factors.push_back({p, 1});
    }
  };

  std::uint64_t rest = n;
  if (rest > bound_) {
    for (std::uint64_t p : primes_) {
      if (p * p > rest) break;
      while (rest % p == 0) {
        rest /= p;
        push(p);
      }
      if (rest <= bound_) break;
    }
    if (rest > bound_) {
      // No factor up to sqrt(rest): rest is prime.
      push(rest);
      return out;
    }
  }
  while (rest > 1) {
    const std::uint32_t p = smallest_factor_[rest];
    rest /= p;
    push(p);
  }
  return out;
}

const Sieve& default_sieve() {
  static const Sieve sieve;
  return sieve;
}

Factorization factorize(std::uint64_t n) { return default_sieve().factorize(n); }

std::uint64_t divisor_count(const Factorization& f) {
  std::uint64_t d = 1;
  for (const auto& [p, a] : f.factors) d *= a + 1;
  return d;
}

std::uint64_t divisor_sum(const Factorization& f) {
  std::uint64_t s = 1;
  for (const auto& [p, a] : f.factors) {
    // 1 + p + ... + p^a, summed term by term to stay in integers.
    std::uint64_t term = 1;
    std::uint64_t local = 1;
    for (unsigned j = 0; j < a; ++j) {
      term *= p;
      local += term;
    }
    s *= local;
  }
  return s;
}

std::uint64_t totient(const Factorization& f) {
  std::uint64_t t = 1;
  for (const auto& [p, a] : f.factors) {
    t *= p - 1;
    for (unsigned j = 1; j < a; ++j) t *= p;
  }
  return t;
}

std::uint64_t divisor_count(std::uint64_t n) { return divisor_count(factorize(n)); }
std::uint64_t divisor_sum(std::uint64_t n) { return divisor_sum(factorize(n)); }
std::uint64_t totient(std::uint64_t n) { return totient(factorize(n)); }

std::vector<std::uint64_t> primes(std::size_t k) {
  const auto& base = default_sieve().primes();
  if (k <= base.size()) return {base.begin(), base.begin() + static_cast<std::ptrdiff_t>(k)};
  // p_k < k (ln k + ln ln k) for k >= 6.
  const double kd = static_cast<double>(k);
  const double estimate = kd * (std::log(kd) + std::log(std::log(kd))) + 10.0;
  if (estimate > 4e9) throw ValidationError("primes: k too large");
  const Sieve big(static_cast<std::uint32_t>(estimate));
  const auto& all = big.primes();
  return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k)};
}

namespace {

void extend_smooth(const std::vector<std::uint64_t>& basis, std::size_t index,
                   std::uint64_t bound, Factorization& current,
                   std::vector<Factorization>& out) {
  if (index == basis.size()) {
    out.push_back(current);
    return;
  }
  const std::uint64_t p = basis[index];
  extend_smooth(basis, index + 1, bound, current, out);
  const std::uint64_t saved = current.value;
  unsigned exponent = 0;
  while (current.value <= bound / p) {
    current.value *= p;
    ++exponent;
    current.factors.push_back({p, exponent});
    extend_smooth(basis, index + 1, bound, current, out);
    current.factors.pop_back();
  }
  current.value = saved;
}

}  // namespace

std::vector<Factorization> smooth_factorizations(std::size_t prime_count,
                                                 std::uint64_t bound) {
  if (prime_count == 0) throw ValidationError("smooth_numbers: N must be >= 1");
  if (bound == 0) throw ValidationError("smooth_numbers: M must be >= 1");
  const auto basis = primes(prime_count);
  std::vector<Factorization> out;
  Factorization current;
  extend_smooth(basis, 0, bound, current, out);
  std::sort(out.begin(), out.end(),
            [](const Factorization& a, const Factorization& b) { return a.value < b.value; });
  return out;
}

std::vector<std::uint64_t> smooth_numbers(std::size_t prime_count, std::uint64_t bound) {
  const auto fs = smooth_factorizations(prime_count, bound);
  std::vector<std::uint64_t> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(f.value);
  return out;
}

bool is_smooth(std::uint64_t n, std::size_t prime_count) {
  if (n == 0) return false;
  for (std::uint64_t p : primes(prime_count)) {
    while (n % p == 0) n /= p;
  }
  return n == 1;
}

MultiplicativityReport multiplicativity_report(
    const std::function<double(std::uint64_t)>& w, std::uint64_t bound,
    bool complete, double rel_tol) {
  MultiplicativityReport report;
  report.complete = complete;
  report.bound = bound;
  std::vector<double> small(bound + 1, 0.0);
  for (std::uint64_t n = 1; n <= bound; ++n) small[n] = w(n);

  for (std::uint64_t m = 1; m <= bound; ++m) {
    for (std::uint64_t n = 1; n <= bound; ++n) {
      if (!complete && std::gcd(m, n) != 1) continue;
      ++report.pairs_checked;
      const double joint = w(m * n);
      const double split = small[m] * small[n];
      const double scale = std::max(std::abs(joint), std::abs(split));
      if (std::abs(joint - split) > rel_tol * scale) {
        report.pass = false;
        report.counterexample = MultiplicativityCounterexample{m, n, joint, split};
        return report;
      }
    }
  }
  return report;
}

}  // namespace dirichlet
