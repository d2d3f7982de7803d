#include "dirichlet/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "dirichlet/error.hpp"
#include "dirichlet/text.hpp"

namespace dirichlet {

DirichletPolynomial::DirichletPolynomial(
    std::initializer_list<std::pair<const std::uint64_t, Complex>> terms) {
  for (const auto& [n, c] : terms) add(n, c);
}

void DirichletPolynomial::set(std::uint64_t n, Complex value) {
  if (n == 0) throw ValidationError("symbol: index n must be >= 1");
  if (value == Complex{}) {
    terms_.erase(n);
  } else {
    terms_[n] = value;
  }
}

void DirichletPolynomial::add(std::uint64_t n, Complex value) {
  set(n, coefficient(n) + value);
}

Complex DirichletPolynomial::coefficient(std::uint64_t n) const {
  const auto it = terms_.find(n);
  return it == terms_.end() ? Complex{} : it->second;
}

DirichletPolynomial DirichletPolynomial::scaled(Complex c) const {
  DirichletPolynomial out;
  for (const auto& [n, a] : terms_) out.set(n, a * c);
  return out;
}

DirichletPolynomial operator+(const DirichletPolynomial& a, const DirichletPolynomial& b) {
  DirichletPolynomial out = a;
  for (const auto& [n, c] : b.terms_) out.add(n, c);
  return out;
}

DirichletPolynomial operator-(const DirichletPolynomial& a, const DirichletPolynomial& b) {
  DirichletPolynomial out = a;
  for (const auto& [n, c] : b.terms_) out.add(n, -c);
  return out;
}

Complex inverse_power(std::uint64_t n, Complex s) {
  if (n == 1) return {1.0, 0.0};
  const double ln = std::log(static_cast<double>(n));
  const double magnitude = std::exp(-s.real() * ln);
  const double phase = s.imag() * ln;
  const double a = std::abs(phase);
  const double sn = std::sin(a);
  return {magnitude * std::cos(a), phase < 0.0 ? magnitude * sn : -magnitude * sn};
}

Complex evaluate(const DirichletPolynomial& f, Complex s) {
  Complex total{};
  for (const auto& [n, a] : f.terms()) total += a * inverse_power(n, s);
  return total;
}

DirichletPolynomial multiply(const DirichletPolynomial& f, const DirichletPolynomial& g,
                             std::size_t max_terms) {
  if (!f.empty() && g.size() > max_terms / f.size()) {
    throw ValidationError("multiply: product support " + std::to_string(f.size()) + " x " +
                          std::to_string(g.size()) + " exceeds bound " +
                          std::to_string(max_terms));
  }
  DirichletPolynomial out;
  DirichletPolynomial::Terms acc;
  for (const auto& [m, a] : f.terms()) {
    for (const auto& [n, b] : g.terms()) {
      if (n > UINT64_MAX / m) throw ValidationError("multiply: index overflow");
      acc[m * n] += a * b;
    }
  }
  for (const auto& [k, c] : acc) out.set(k, c);
  return out;
}

DirichletPolynomial project_smooth(const DirichletPolynomial& f, std::size_t prime_count) {
  if (prime_count == 0) throw ValidationError("project: N must be >= 1");
  DirichletPolynomial out;
  for (const auto& [n, a] : f.terms()) {
    if (is_smooth(n, prime_count)) out.set(n, a);
  }
  return out;
}

Complex hw_inner(const DirichletPolynomial& f, const DirichletPolynomial& g,
                 const WeightSpec& spec) {
  Complex total{};
  for (const auto& [n, a] : f.terms()) {
    const Complex b = g.coefficient(n);
    if (b != Complex{}) total += a * std::conj(b) * weight(spec, n);
  }
  return total;
}

double hw_norm(const DirichletPolynomial& f, const WeightSpec& spec) {
  double total = 0.0;
  for (const auto& [n, a] : f.terms()) total += std::norm(a) * weight(spec, n);
  return std::sqrt(total);
}

Complex recover_coefficient(const DirichletPolynomial& f, double sigma0, double x, double T,
                            std::size_t steps) {
  if (!(x > 0.0)) throw ValidationError("recover: x must be > 0");
  if (!(T > 0.0)) throw ValidationError("recover: T must be > 0");
  if (steps < 2) throw ValidationError("recover: steps must be >= 2");

  // Integrand sum_n a_n (x/n)^{sigma0} e^{i t ln(x/n)}, evaluated term-wise.
  struct Term {
    Complex amplitude;
    double frequency;
  };
  std::vector<Term> terms;
  terms.reserve(f.size());
  const double lx = std::log(x);
  for (const auto& [n, a] : f.terms()) {
    const double l = lx - std::log(static_cast<double>(n));
    terms.push_back({a * std::exp(sigma0 * l), l});
  }

  const double h = 2.0 * T / static_cast<double>(steps);
  Complex total{};
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = -T + h * static_cast<double>(i);
    Complex value{};
    for (const auto& term : terms) value += term.amplitude * std::polar(1.0, term.frequency * t);
    total += (i == 0 || i == steps) ? 0.5 * value : value;
  }
  return total * h / (2.0 * T);
}

std::size_t recovery_steps(const DirichletPolynomial& f, double x, double T,
                           double per_oscillation) {
  double fastest = 0.0;
  for (const auto& [n, a] : f.terms()) {
    fastest = std::max(fastest, std::abs(std::log(x / static_cast<double>(n))));
  }
  const double periods = 2.0 * T * fastest / (2.0 * std::numbers::pi);
  return std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(periods * per_oscillation)));
}

double recovery_error_envelope(const DirichletPolynomial& f, double sigma0, double x, double T) {
  double total = 0.0;
  for (const auto& [n, a] : f.terms()) {
    const double l = std::log(x / static_cast<double>(n));
    if (l == 0.0) continue;
    total += std::abs(a) * std::exp(sigma0 * l) / (T * std::abs(l));
  }
  return total;
}

DirichletPolynomial parse_polynomial(std::string_view text) {
  DirichletPolynomial out;
  text = trim(text);
  if (text.empty()) return out;
  for (auto item : split(text, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ValidationError("symbol: term '" + std::string(item) + "' must read n:re[,im]");
    }
    const auto n = parse_uint(item.substr(0, colon), "symbol (index)");
    if (n == 0) throw ValidationError("symbol (index): n must be >= 1");
    out.add(n, parse_complex(item.substr(colon + 1), "symbol (coefficient)"));
  }
  return out;
}

DirichletPolynomial parse_polynomial_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("symbol: invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ValidationError("symbol: JSON form must be an array");
  DirichletPolynomial out;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("n") || !item["n"].is_number_unsigned()) {
      throw ValidationError("symbol: each JSON term needs an unsigned \"n\"");
    }
    const auto n = item["n"].get<std::uint64_t>();
    if (n == 0) throw ValidationError("symbol (index): n must be >= 1");
    const double re = item.value("re", 0.0);
    const double im = item.value("im", 0.0);
    out.add(n, {re, im});
  }
  return out;
}

std::string to_string(const DirichletPolynomial& f) {
  std::string out;
  for (const auto& [n, a] : f.terms()) {
    if (!out.empty()) out += ';';
    out += std::to_string(n) + ':' + format_double(a.real()) + ',' + format_double(a.imag());
  }
  return out;
}

}  // namespace dirichlet
