#include "dirichlet/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "dirichlet/error.hpp"
#include "dirichlet/text.hpp"

namespace dirichlet {

namespace wk = weight_kinds;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

__extension__ using u128 = unsigned __int128;

// sigma(p^k) and phi(p^k) as long double; exact while the values fit 128 bits.
long double prime_power_divisor_sum(std::uint64_t p, unsigned k) {
  u128 term = 1;
  u128 sum = 1;
  const u128 cap = static_cast<u128>(1) << 120;
  for (unsigned j = 0; j < k; ++j) {
    if (term > cap / p) {
      const long double lp = static_cast<long double>(p);
      return (std::pow(lp, static_cast<long double>(k + 1)) - 1.0L) / (lp - 1.0L);
    }
    term *= p;
    sum += term;
  }
  return static_cast<long double>(sum);
}

long double prime_power_totient(std::uint64_t p, unsigned k) {
  if (k == 0) return 1.0L;
  u128 t = p - 1;
  const u128 cap = static_cast<u128>(1) << 120;
  for (unsigned j = 1; j < k; ++j) {
    if (t > cap / p) {
      const long double lp = static_cast<long double>(p);
      return std::pow(lp, static_cast<long double>(k - 1)) * (lp - 1.0L);
    }
    t *= p;
  }
  return static_cast<long double>(t);
}

void require_positive(double w, const WeightSpec& spec, std::uint64_t n) {
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw InvariantError("weight " + to_string(spec) + " at n=" + std::to_string(n) +
                         " is not a positive finite number");
  }
}

}  // namespace

WeightSpec make_prime_power_table(std::vector<std::pair<PrimePower, double>> entries) {
  std::map<std::pair<std::uint64_t, unsigned>, double> table;
  std::ostringstream label;
  label << "mult:";
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.prime, a.first.exponent) < std::pair(b.first.prime, b.first.exponent);
  });
  bool first = true;
  for (const auto& [pp, v] : entries) {
    if (pp.exponent == 0) throw ValidationError("mult: exponent must be >= 1");
    if (!default_sieve().is_prime(pp.prime)) {
      throw ValidationError("mult: " + std::to_string(pp.prime) + " is not prime");
    }
    if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError("mult: values must be positive");
    table[{pp.prime, pp.exponent}] = v;
    if (!first) label << ',';
    first = false;
    label << pp.prime << '^' << pp.exponent << '=' << format_double(v);
  }
  return wk::MultiplicativeRule{
      [table](std::uint64_t p, unsigned k) {
        if (k == 0) return 1.0;
        const auto it = table.find({p, k});
        return it == table.end() ? 1.0 : it->second;
      },
      label.str()};
}

WeightSpec parse_weight_spec(std::string_view text) {
  const std::string_view head = text.substr(0, text.find(':'));
  const std::string_view body =
      text.find(':') == std::string_view::npos ? std::string_view{} : text.substr(text.find(':') + 1);

  if (text == "constant") return wk::Constant{};
  if (text == "recip-d") return wk::ReciprocalDivisorCount{};
  if (text == "recip-sigma") return wk::ReciprocalDivisorSum{};
  if (text == "recip-phi") return wk::ReciprocalTotient{};
  if (head == "powerlaw") {
    const double delta = parse_double(body, "spec (powerlaw delta)");
    if (!(delta >= 0.0)) throw ValidationError("spec: powerlaw delta must be >= 0");
    return wk::PowerLaw{delta};
  }
  if (head == "atoms") {
    wk::AtomicMeasure measure;
    for (const auto item : split(body, ',')) {
      const auto parts = split(item, ':');
      if (parts.size() != 2) throw ValidationError("spec: atom must read sigma:mass");
      const double sigma = parse_double(parts[0], "spec (atom sigma)");
      const double mass = parse_double(parts[1], "spec (atom mass)");
      if (!(sigma >= 0.0)) throw ValidationError("spec: atom sigma must be >= 0");
      if (!(mass > 0.0)) throw ValidationError("spec: atom mass must be > 0");
      measure.atoms.push_back({sigma, mass});
    }
    if (measure.atoms.empty()) throw ValidationError("spec: atoms list is empty");
    return measure;
  }
  if (head == "mult") {
    std::vector<std::pair<PrimePower, double>> entries;
    if (!body.empty()) {
      for (const auto item : split(body, ',')) {
        const auto eq = item.find('=');
        const auto caret = item.find('^');
        if (eq == std::string_view::npos || caret == std::string_view::npos || caret > eq) {
          throw ValidationError("spec: mult entry must read p^k=value");
        }
        const auto p = parse_uint(item.substr(0, caret), "spec (mult prime)");
        const auto k = parse_uint(item.substr(caret + 1, eq - caret - 1), "spec (mult exponent)");
        const double v = parse_double(item.substr(eq + 1), "spec (mult value)");
        entries.push_back({PrimePower{p, static_cast<unsigned>(k)}, v});
      }
    }
    return make_prime_power_table(std::move(entries));
  }
  throw ValidationError("spec: unknown weight spec '" + std::string(text) + "'");
}

std::string to_string(const WeightSpec& spec) {
  return std::visit(
      Overloaded{
          [](const wk::Constant&) { return std::string("constant"); },
          [](const wk::PowerLaw& s) { return "powerlaw:" + format_double(s.delta); },
          [](const wk::AtomicMeasure& s) {
            std::string out = "atoms:";
            for (std::size_t i = 0; i < s.atoms.size(); ++i) {
              if (i) out += ',';
              out += format_double(s.atoms[i].sigma) + ':' + format_double(s.atoms[i].mass);
            }
            return out;
          },
          [](const wk::MultiplicativeRule& s) { return s.label; },
          [](const wk::ReciprocalDivisorCount&) { return std::string("recip-d"); },
          [](const wk::ReciprocalDivisorSum&) { return std::string("recip-sigma"); },
          [](const wk::ReciprocalTotient&) { return std::string("recip-phi"); },
      },
      spec);
}

double prime_power_weight(const WeightSpec& spec, std::uint64_t p, unsigned k) {
  const double lp = std::log(static_cast<double>(p));
  return std::visit(
      Overloaded{
          [](const wk::Constant&) { return 1.0; },
          [&](const wk::PowerLaw& s) { return std::exp(-2.0 * s.delta * k * lp); },
          [&](const wk::AtomicMeasure& s) {
            double w = 0.0;
            for (const auto& a : s.atoms) w += a.mass * std::exp(-2.0 * a.sigma * k * lp);
            return w;
          },
          [&](const wk::MultiplicativeRule& s) { return k == 0 ? 1.0 : s.value(p, k); },
          [&](const wk::ReciprocalDivisorCount&) { return 1.0 / (k + 1.0); },
          [&](const wk::ReciprocalDivisorSum&) {
            return static_cast<double>(1.0L / prime_power_divisor_sum(p, k));
          },
          [&](const wk::ReciprocalTotient&) {
            return static_cast<double>(1.0L / prime_power_totient(p, k));
          },
      },
      spec);
}

double weight(const WeightSpec& spec, const Factorization& f) {
  const double n = static_cast<double>(f.value);
  const double w = std::visit(
      Overloaded{
          [](const wk::Constant&) { return 1.0; },
          [&](const wk::PowerLaw& s) { return std::pow(n, -2.0 * s.delta); },
          [&](const wk::AtomicMeasure& s) {
            double total = 0.0;
            for (const auto& a : s.atoms) total += a.mass * std::pow(n, -2.0 * a.sigma);
            return total;
          },
          [&](const wk::MultiplicativeRule& s) {
            double total = 1.0;
            for (const auto& [p, a] : f.factors) total *= s.value(p, a);
            return total;
          },
          [&](const wk::ReciprocalDivisorCount&) {
            return 1.0 / static_cast<double>(divisor_count(f));
          },
          [&](const wk::ReciprocalDivisorSum&) {
            return 1.0 / static_cast<double>(divisor_sum(f));
          },
          [&](const wk::ReciprocalTotient&) {
            return 1.0 / static_cast<double>(totient(f));
          },
      },
      spec);
  require_positive(w, spec, f.value);
  return w;
}

double weight(const WeightSpec& spec, std::uint64_t n) {
  if (n == 0) throw ValidationError("weight: n must be positive");
  // Only the arithmetic variants need the factorization.
  if (std::holds_alternative<wk::Constant>(spec) || std::holds_alternative<wk::PowerLaw>(spec) ||
      std::holds_alternative<wk::AtomicMeasure>(spec)) {
    return weight(spec, Factorization{n, {}});
  }
  return weight(spec, factorize(n));
}

double inverse_weight(const WeightSpec& spec, const Factorization& f) {
  if (std::holds_alternative<wk::ReciprocalDivisorCount>(spec)) {
    return static_cast<double>(divisor_count(f));
  }
  if (std::holds_alternative<wk::ReciprocalDivisorSum>(spec)) {
    return static_cast<double>(divisor_sum(f));
  }
  if (std::holds_alternative<wk::ReciprocalTotient>(spec)) {
    return static_cast<double>(totient(f));
  }
  return 1.0 / weight(spec, f);
}

double prime_power_inverse_weight(const WeightSpec& spec, std::uint64_t p, unsigned k) {
  if (std::holds_alternative<wk::ReciprocalDivisorCount>(spec)) return k + 1.0;
  if (std::holds_alternative<wk::ReciprocalDivisorSum>(spec)) {
    return static_cast<double>(prime_power_divisor_sum(p, k));
  }
  if (std::holds_alternative<wk::ReciprocalTotient>(spec)) {
    return static_cast<double>(prime_power_totient(p, k));
  }
  return 1.0 / prime_power_weight(spec, p, k);
}

std::vector<double> measure_weights(std::span<const wk::Atom> atoms, std::uint64_t n_max) {
  std::vector<double> out(n_max + 1, 0.0);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    double total = 0.0;
    for (const auto& a : atoms) total += a.mass * std::pow(static_cast<double>(n), -2.0 * a.sigma);
    out[n] = total;
  }
  return out;
}

bool is_multiplicative(const WeightSpec& spec) {
  if (const auto* m = std::get_if<wk::AtomicMeasure>(&spec)) {
    return m->atoms.size() == 1 && m->atoms[0].mass == 1.0;
  }
  return true;
}

ConditionReport check_prime_power_decay(const WeightSpec& spec, double delta,
                                        std::uint64_t pmax, unsigned kmax,
                                        double rel_tol) {
  ConditionReport report;
  report.condition = "prime_power_decay";
  report.parameters = {{"delta", delta},
                       {"pmax", static_cast<double>(pmax)},
                       {"kmax", static_cast<double>(kmax)}};
  for (std::uint64_t p : default_sieve().primes()) {
    if (p > pmax) break;
    const double factor = std::pow(static_cast<double>(p), -2.0 * delta);
    double previous = prime_power_weight(spec, p, 0);
    for (unsigned k = 1; k <= kmax; ++k) {
      const double current = prime_power_weight(spec, p, k);
      const double bound = factor * previous;
      if (current > bound * (1.0 + rel_tol)) {
        report.pass = false;
        report.witnesses.push_back({p, k, current, bound});
      }
      previous = current;
    }
  }
  report.note = "w_{p^k} <= p^{-2 delta} w_{p^{k-1}}";
  return report;
}

GrowthBound check_growth_bound(const WeightSpec& spec, double sigma, std::uint64_t bound) {
  if (!(sigma > 0.0)) throw ValidationError("growth: sigma must be > 0");
  if (bound == 0) throw ValidationError("growth: M must be >= 1");
  GrowthBound out;
  out.report.condition = "growth_bound";
  out.report.parameters = {{"sigma", sigma}, {"M", static_cast<double>(bound)}};

  double tail_max = 0.0;
  std::uint64_t tail_arg = 0;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    const double g = std::pow(static_cast<double>(n), -2.0 * sigma) / weight(spec, n);
    if (g > out.constant) {
      out.constant = g;
      out.argmax = n;
    }
    if (n > bound / 2 && g > tail_max) {
      tail_max = g;
      tail_arg = n;
    }
  }
  out.second_half_ratio = out.constant > 0.0 ? tail_max / out.constant : 0.0;
  if (out.second_half_ratio >= kDecadeRatioThreshold) {
    out.report.pass = false;
    out.report.witnesses.push_back(
        {tail_arg, 0, tail_max, kDecadeRatioThreshold * out.constant});
  }
  out.report.note =
      "heuristic: the maximum of w_n^{-1} n^{-2 sigma} over n <= M is not a proof of boundedness";
  return out;
}

std::string_view to_string(TailVerdict v) {
  switch (v) {
    case TailVerdict::kConverging: return "converging";
    case TailVerdict::kDiverging: return "diverging";
    case TailVerdict::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

TailVerdict classify_decades(double increment, double previous_increment) {
  if (!(previous_increment > 0.0)) return TailVerdict::kInconclusive;
  const double ratio = increment / previous_increment;
  if (ratio < kDecadeRatioThreshold) return TailVerdict::kConverging;
  if (ratio >= 1.0) return TailVerdict::kDiverging;
  return TailVerdict::kInconclusive;
}

TailReport tail_report(const WeightSpec& spec, double sigma, std::uint64_t bound) {
  if (bound == 0) throw ValidationError("tail: M must be >= 1");
  TailReport out;
  const std::uint64_t tenth = bound / 10;
  const std::uint64_t hundredth = bound / 100;
  long double sum = 0.0L;
  long double at_tenth = 0.0L;
  long double at_hundredth = 0.0L;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    sum += std::pow(static_cast<long double>(n), -2.0L * sigma) / weight(spec, n);
    if (n == tenth) at_tenth = sum;
    if (n == hundredth) at_hundredth = sum;
  }
  out.partial_sum = static_cast<double>(sum);
  out.increment = static_cast<double>(sum - at_tenth);
  out.previous_increment = static_cast<double>(at_tenth - at_hundredth);
  if (hundredth >= 1) {
    out.decade_ratio = out.previous_increment > 0.0 ? out.increment / out.previous_increment : 0.0;
    out.verdict = classify_decades(out.increment, out.previous_increment);
  }
  out.note = "heuristic decade-increment test (threshold 0.5); not a proof of summability";
  return out;
}

}  // namespace dirichlet
