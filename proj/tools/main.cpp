// dirichlet-lab: batch driver over the dirichlet library.
// Exit status: 0 ok, 2 invalid input, 3 numeric non-convergence, 1 internal.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dirichlet/arith.hpp"
#include "dirichlet/error.hpp"
#include "dirichlet/kernels.hpp"
#include "dirichlet/moments.hpp"
#include "dirichlet/multiplier.hpp"
#include "dirichlet/series.hpp"
#include "dirichlet/supnorm.hpp"
#include "dirichlet/text.hpp"
#include "dirichlet/weights.hpp"
#include "document.hpp"

namespace {

using namespace dirichlet;
using lab::Document;
using lab::Json;

// Raw flag values. Everything an action reads is echoed into the document.
struct RunConfig {
  std::string spec;
  std::string symbol;
  std::string other;
  std::string u = "1";
  std::string z = "1";
  std::string s = "1";
  std::string b = "1";
  std::string points;
  std::string grid = "0:3:0.01";
  std::string sizes;
  std::string n_text;  // --N: a count, or a list for `measure curve`
  std::string kind = "gronwall";
  std::string kernel = "direct";
  double delta = 0.0;
  double Delta = 0.0;
  double sigma = 0.0;
  double T = 50.0;
  double x = 1.0;
  double lower_slack = 1e-9;
  double upper_slack = 1e-9;
  std::uint64_t n = 0;
  std::uint64_t M = 0;
  std::uint64_t max = 0;
  std::uint64_t q = 2;
  std::uint64_t kmax = 0;
  std::uint64_t pmax = 100;
  std::uint64_t budget = 2000;
  std::uint64_t rounds = 4;
  std::uint64_t samples = 20001;
  std::uint64_t steps = 0;
  std::uint64_t iterations = 200000;
  std::uint64_t seed = 0;
  bool complete = false;
  std::string format = "json";
  std::string out;
};

// Re-labels a ValidationError with the flag it came from.
template <class F>
auto field(const char* name, F&& parse) {
  try {
    return parse();
  } catch (const ValidationError& e) {
    // Library messages usually lead with the bare field name already.
    const std::string bare = std::string(name).substr(2) + ":";
    const std::string what = e.what();
    throw ValidationError(std::string(name) + ": " +
                          (what.starts_with(bare) ? what.substr(bare.size() + 1) : what));
  }
}

Json complex_json(Complex c) { return Json{{"re", c.real()}, {"im", c.imag()}}; }

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::vector<std::uint64_t> parse_list(const std::string& text, const char* name) {
  return field(name, [&] {
    std::vector<std::uint64_t> out;
    for (auto part : split(text, ',')) out.push_back(parse_uint(trim(part), name));
    if (out.empty()) throw ValidationError("empty list");
    return out;
  });
}

std::string factorization_text(const Factorization& f) {
  if (f.factors.empty()) return "1";
  std::string s;
  for (const auto& pp : f.factors) {
    if (!s.empty()) s += '*';
    s += std::to_string(pp.prime);
    if (pp.exponent > 1) s += '^' + std::to_string(pp.exponent);
  }
  return s;
}

Json polynomial_rows(const DirichletPolynomial& f) {
  Json rows = Json::array();
  for (const auto& [n, a] : f.terms()) rows.push_back({{"n", n}, {"re", a.real()}, {"im", a.imag()}});
  return rows;
}

Json witness_rows(const std::vector<Witness>& ws) {
  Json rows = Json::array();
  for (const auto& w : ws) rows.push_back({{"p", w.first}, {"k", w.second}, {"lhs", w.lhs}, {"rhs", w.rhs}});
  return rows;
}

Json condition_json(const ConditionReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  return {{"condition", r.condition}, {"pass", r.pass}, {"parameters", params},
          {"witness_count", r.witnesses.size()}, {"note", r.note}};
}

Json estimate_json(const KernelEstimate& e) {
  return {{"value_re", e.value.real()},
          {"value_im", e.value.imag()},
          {"tail", number_or_null(e.tail_bound)},
          {"terms", e.terms_used},
          {"rigorous", e.rigorous},
          {"divergence_warning", e.divergence_warning}};
}

Json sup_json(const SupEstimate& e) {
  return {{"value", e.value}, {"argmax", e.argmax}, {"evaluations", e.evaluations}, {"seed", e.seed}};
}

class Driver {
 public:
  explicit Driver(CLI::App& app) : app_(app) { register_all(); }

  Document run() {
    if (!action_) throw ValidationError("no action given; see --help");
    doc_.config["command"] = command_;
    doc_.config["action"] = action_name_;
    action_();
    doc_.config["seed"] = cfg_.seed;
    doc_.config["format"] = cfg_.format;
    return std::move(doc_);
  }

  const RunConfig& config() const { return cfg_; }

 private:
  // Accessors that parse a flag and echo the value used.
  WeightSpec spec() {
    auto parsed = field("--spec", [&] { return parse_weight_spec(cfg_.spec); });
    doc_.config["spec"] = to_string(parsed);
    return parsed;
  }
  DirichletPolynomial symbol(const char* name = "--symbol") {
    const std::string& text = std::string(name) == "--other" ? cfg_.other : cfg_.symbol;
    auto parsed = field(name, [&] { return parse_polynomial(text); });
    doc_.config[std::string(name).substr(2)] = to_string(parsed);
    return parsed;
  }
  Complex complex_flag(const char* name, const std::string& text) {
    const Complex c = field(name, [&] { return parse_complex(text, "value"); });
    doc_.config[std::string(name).substr(2)] = complex_json(c);
    return c;
  }
  double real(const char* name, double v) {
    if (!std::isfinite(v)) throw ValidationError(std::string(name) + ": must be finite");
    doc_.config[std::string(name).substr(2)] = v;
    return v;
  }
  std::uint64_t count(const char* name, std::uint64_t v) {
    doc_.config[std::string(name).substr(2)] = v;
    return v;
  }
  std::uint64_t n_scalar() {
    const auto v = field("--N", [&] { return parse_uint(cfg_.n_text, "value"); });
    doc_.config["N"] = v;
    return v;
  }
  std::optional<std::uint64_t> n_optional() {
    if (cfg_.n_text.empty()) {
      doc_.config["N"] = nullptr;
      return std::nullopt;
    }
    return n_scalar();
  }
  std::optional<unsigned> kmax_optional() {
    if (cfg_.kmax == 0) {
      doc_.config["kmax"] = nullptr;
      return std::nullopt;
    }
    return static_cast<unsigned>(count("--kmax", cfg_.kmax));
  }
  SigmaGrid grid() {
    auto g = field("--grid", [&] { return SigmaGrid::parse(cfg_.grid); });
    doc_.config["grid"] = g.to_string();
    return g;
  }

  CLI::App* command(const char* name, const char* help) {
    auto* sub = app_.add_subcommand(name, help);
    sub->require_subcommand(1);
    sub->fallthrough();
    return sub;
  }
  CLI::App* action(CLI::App* parent, const char* name, const char* help, std::function<void()> fn) {
    auto* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([this, parent, name, fn] {
      command_ = parent->get_name();
      action_name_ = name;
      action_ = fn;
    });
    return sub;
  }

  void add_spec(CLI::App* a) { a->add_option("--spec", cfg_.spec, "weight spec")->required(); }
  void add_symbol(CLI::App* a) {
    a->add_option("--symbol", cfg_.symbol, "Dirichlet polynomial n:re,im;...")->required();
  }

  void register_all();
  void register_arith();
  void register_weights();
  void register_kernel();
  void register_series();
  void register_mult();
  void register_sup();
  void register_measure();

  CLI::App& app_;
  RunConfig cfg_;
  Document doc_;
  std::string command_;
  std::string action_name_;
  std::function<void()> action_;
};

void Driver::register_all() {
  app_.add_option("--seed", cfg_.seed, "random seed")->capture_default_str();
  app_.add_option("--format", cfg_.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app_.add_option("--out", cfg_.out, "output path (default stdout)");
  app_.require_subcommand(1);
  register_arith();
  register_weights();
  register_kernel();
  register_series();
  register_mult();
  register_sup();
  register_measure();
}

void Driver::register_arith() {
  auto* cmd = command("arith", "factorization and multiplicative functions");
  auto single = [&](const char* name, const char* help, std::function<void(std::uint64_t)> emit) {
    auto* a = action(cmd, name, help, [this, emit] {
      const auto n = count("--n", cfg_.n);
      if (n == 0) throw ValidationError("n: must be >= 1");
      doc_.result["n"] = n;
      emit(n);
    });
    a->add_option("n", cfg_.n, "positive integer")->required();
  };
  single("factor", "prime factorization", [this](std::uint64_t n) {
    const auto f = factorize(n);
    doc_.result["factorization"] = factorization_text(f);
    Json rows = Json::array();
    for (const auto& pp : f.factors) rows.push_back({{"p", pp.prime}, {"k", pp.exponent}});
    doc_.result["rows"] = rows;
    doc_.columns = {"p", "k"};
  });
  single("d", "divisor count", [this](std::uint64_t n) { doc_.result["d"] = divisor_count(n); });
  single("sigma", "divisor sum", [this](std::uint64_t n) { doc_.result["sigma"] = divisor_sum(n); });
  single("phi", "Euler totient", [this](std::uint64_t n) { doc_.result["phi"] = totient(n); });

  auto* smooth = action(cmd, "smooth", "numbers <= M smooth over the first N primes", [this] {
    const auto n = n_scalar();
    const auto m = count("--M", cfg_.M);
    const auto list = smooth_factorizations(n, m);
    doc_.result["prime_count"] = n;
    doc_.result["bound"] = m;
    doc_.result["count"] = list.size();
    Json rows = Json::array();
    for (const auto& f : list) rows.push_back({{"n", f.value}, {"factorization", factorization_text(f)}});
    doc_.result["rows"] = rows;
    doc_.columns = {"n", "factorization"};
  });
  smooth->add_option("--N", cfg_.n_text, "number of primes")->required();
  smooth->add_option("--M", cfg_.M, "upper bound")->required();
}

void Driver::register_weights() {
  auto* cmd = command("weights-check", "conditions on a weight sequence");
  auto* decay = action(cmd, "decay", "w_{p^k} <= p^{-2 delta} w_{p^{k-1}}", [this] {
    const auto w = spec();
    const double delta = real("--delta", cfg_.delta);
    const auto pmax = count("--pmax", cfg_.pmax);
    const auto kmax = cfg_.kmax == 0 ? 10 : cfg_.kmax;
    count("--kmax", kmax);
    const auto r = check_prime_power_decay(w, delta, pmax, static_cast<unsigned>(kmax));
    doc_.result = condition_json(r);
    doc_.result["rows"] = witness_rows(r.witnesses);
    doc_.columns = {"p", "k", "lhs", "rhs"};
  });
  add_spec(decay);
  decay->add_option("--delta", cfg_.delta)->required();
  decay->add_option("--pmax", cfg_.pmax)->capture_default_str();
  decay->add_option("--kmax", cfg_.kmax, "default 10");

  auto* growth = action(cmd, "growth", "max_{n <= M} w_n^{-1} n^{-2 sigma}", [this] {
    const auto w = spec();
    const auto g = check_growth_bound(w, real("--sigma", cfg_.sigma), count("--M", cfg_.M));
    doc_.result = condition_json(g.report);
    doc_.result["constant"] = g.constant;
    doc_.result["argmax"] = g.argmax;
    doc_.result["second_half_ratio"] = g.second_half_ratio;
  });
  add_spec(growth);
  growth->add_option("--sigma", cfg_.sigma)->required();
  growth->add_option("--M", cfg_.M)->required();

  auto* tail = action(cmd, "tail", "decade increments of sum w_n^{-1} n^{-2 sigma}", [this] {
    const auto w = spec();
    const auto t = tail_report(w, real("--sigma", cfg_.sigma), count("--M", cfg_.M));
    doc_.result = {{"partial_sum", t.partial_sum},
                   {"increment", t.increment},
                   {"previous_increment", t.previous_increment},
                   {"decade_ratio", number_or_null(t.decade_ratio)},
                   {"verdict", std::string(to_string(t.verdict))},
                   {"note", t.note}};
  });
  add_spec(tail);
  tail->add_option("--sigma", cfg_.sigma)->required();
  tail->add_option("--M", cfg_.M)->required();

  auto* mult = action(cmd, "multiplicativity", "w(mn) = w(m) w(n) over pairs <= M", [this] {
    const auto w = spec();
    const auto m = count("--M", cfg_.M);
    doc_.config["complete"] = cfg_.complete;
    const auto r = multiplicativity_report([&](std::uint64_t k) { return weight(w, k); }, m,
                                           cfg_.complete);
    doc_.result = {{"pass", r.pass},
                   {"complete", r.complete},
                   {"bound", r.bound},
                   {"pairs_checked", r.pairs_checked}};
    if (r.counterexample) {
      doc_.result["counterexample"] = {{"m", r.counterexample->m},
                                       {"n", r.counterexample->n},
                                       {"w_mn", r.counterexample->product_value},
                                       {"w_m_w_n", r.counterexample->value_product}};
    } else {
      doc_.result["counterexample"] = nullptr;
    }
  });
  add_spec(mult);
  mult->add_option("--M", cfg_.M)->required();
  mult->add_flag("--complete", cfg_.complete, "all pairs, not only coprime ones");
}

void Driver::register_kernel() {
  auto* cmd = command("kernel", "reproducing kernel evaluations");
  auto points = [this](CLI::App* a) {
    add_spec(a);
    a->add_option("--u", cfg_.u, "point u (re or re,im)")->capture_default_str();
    a->add_option("--z", cfg_.z, "point z (re or re,im)")->capture_default_str();
  };
  auto* direct = action(cmd, "direct", "sum over n <= M", [this] {
    const auto w = spec();
    const Complex u = complex_flag("--u", cfg_.u);
    const Complex z = complex_flag("--z", cfg_.z);
    doc_.result = estimate_json(kernel_direct(w, u, z, count("--M", cfg_.M)));
  });
  points(direct);
  direct->add_option("--M", cfg_.M)->required();

  auto* euler = action(cmd, "euler", "product of local factors over the first N primes", [this] {
    const auto w = spec();
    const Complex u = complex_flag("--u", cfg_.u);
    const Complex z = complex_flag("--z", cfg_.z);
    const auto n = n_scalar();
    doc_.result = estimate_json(kernel_euler(w, u, z, n, kmax_optional()));
  });
  points(euler);
  euler->add_option("--N", cfg_.n_text)->required();
  euler->add_option("--kmax", cfg_.kmax, "local truncation (default ceil(40/ln p))");

  auto* projected = action(cmd, "projected", "sum over N-smooth n <= M", [this] {
    const auto w = spec();
    const Complex u = complex_flag("--u", cfg_.u);
    const Complex z = complex_flag("--z", cfg_.z);
    const auto n = n_scalar();
    doc_.result = estimate_json(kernel_projected(w, u, z, n, count("--M", cfg_.M)));
  });
  points(projected);
  projected->add_option("--N", cfg_.n_text)->required();
  projected->add_option("--M", cfg_.M)->required();

  auto* ratio = action(cmd, "ratio", "k^w / k^0 over the first N primes", [this] {
    const auto w = spec();
    const Complex u = complex_flag("--u", cfg_.u);
    const Complex z = complex_flag("--z", cfg_.z);
    const auto n = n_scalar();
    doc_.result = {{"value", complex_json(kernel_ratio(w, u, z, n, kmax_optional()))}};
  });
  points(ratio);
  ratio->add_option("--N", cfg_.n_text)->required();
  ratio->add_option("--kmax", cfg_.kmax);

  auto* gram = action(cmd, "gram", "eigenvalue extremes of a Gram matrix", [this] {
    const auto w = spec();
    std::vector<Complex> pts = field("--points", [&] {
      std::vector<Complex> out;
      for (auto part : split(cfg_.points, ';')) out.push_back(parse_complex(trim(part), "point"));
      return out;
    });
    Json echoed = Json::array();
    for (auto p : pts) echoed.push_back(complex_json(p));
    doc_.config["points"] = echoed;
    doc_.config["kernel"] = cfg_.kernel;
    KernelFunction k;
    if (cfg_.kernel == "direct") {
      const auto m = count("--M", cfg_.M);
      k = [w, m](Complex a, Complex b) { return kernel_direct(w, a, b, m).value; };
    } else if (cfg_.kernel == "euler") {
      const auto n = n_scalar();
      const auto km = kmax_optional();
      k = [w, n, km](Complex a, Complex b) { return kernel_euler(w, a, b, n, km).value; };
    } else {
      const auto n = n_scalar();
      const auto km = kmax_optional();
      k = [w, n, km](Complex a, Complex b) { return kernel_ratio(w, a, b, n, km); };
    }
    const auto g = gram_spectrum(k, pts);
    doc_.result = {{"size", pts.size()},
                   {"min_eigenvalue", g.min_eigenvalue},
                   {"max_abs_eigenvalue", g.max_abs_eigenvalue}};
  });
  add_spec(gram);
  gram->add_option("--points", cfg_.points, "points separated by ';'")->required();
  gram->add_option("--kernel", cfg_.kernel, "direct, euler or ratio")
      ->check(CLI::IsMember({"direct", "euler", "ratio"}))
      ->capture_default_str();
  gram->add_option("--M", cfg_.M, "bound for the direct kernel");
  gram->add_option("--N", cfg_.n_text, "prime count for euler/ratio");
  gram->add_option("--kmax", cfg_.kmax);
}

void Driver::register_series() {
  auto* cmd = command("series", "Dirichlet polynomial operations");
  auto* eval = action(cmd, "eval", "value at s", [this] {
    const auto f = symbol();
    const Complex s = complex_flag("--s", cfg_.s);
    doc_.result = {{"value", complex_json(evaluate(f, s))}};
  });
  add_symbol(eval);
  eval->add_option("--s", cfg_.s, "point (re or re,im)")->required();

  auto* mul = action(cmd, "multiply", "Dirichlet convolution", [this] {
    const auto f = symbol();
    const auto g = symbol("--other");
    const auto h = multiply(f, g);
    doc_.result = {{"product", to_string(h)}, {"rows", polynomial_rows(h)}};
    doc_.columns = {"n", "re", "im"};
  });
  add_symbol(mul);
  mul->add_option("--other", cfg_.other, "second factor")->required();

  auto* project = action(cmd, "project", "keep terms smooth over the first N primes", [this] {
    const auto f = symbol();
    const auto h = project_smooth(f, n_scalar());
    doc_.result = {{"projected", to_string(h)}, {"rows", polynomial_rows(h)}};
    doc_.columns = {"n", "re", "im"};
  });
  add_symbol(project);
  project->add_option("--N", cfg_.n_text)->required();

  auto* recover = action(cmd, "recover", "mean of f(s) x^s over sigma + i[-T, T]", [this] {
    const auto f = symbol();
    const double sigma = real("--sigma", cfg_.sigma);
    const double x = real("--x", cfg_.x);
    const double t = real("--T", cfg_.T);
    if (!(x > 0.0)) throw ValidationError("--x: must be > 0");
    if (!(t > 0.0)) throw ValidationError("--T: must be > 0");
    const std::size_t steps = cfg_.steps ? cfg_.steps : recovery_steps(f, x, t);
    count("--steps", steps);
    const Complex v = recover_coefficient(f, sigma, x, t, steps);
    const double rounded = std::round(x);
    const Complex target = rounded == x ? f.coefficient(static_cast<std::uint64_t>(x)) : Complex{};
    doc_.result = {{"estimate", complex_json(v)},
                   {"target", complex_json(target)},
                   {"error", std::abs(v - target)},
                   {"envelope", recovery_error_envelope(f, sigma, x, t)}};
  });
  add_symbol(recover);
  recover->add_option("--sigma", cfg_.sigma, "abscissa sigma_0")->required();
  recover->add_option("--x", cfg_.x)->required();
  recover->add_option("--T", cfg_.T)->capture_default_str();
  recover->add_option("--steps", cfg_.steps, "trapezoid steps (default: 16 per oscillation)");
}

void Driver::register_mult() {
  auto* cmd = command("mult-norm", "multiplication operators on H^w");
  auto indices = [this] {
    const auto n = n_optional();
    const auto m = count("--M", cfg_.M);
    return n ? smooth_chain(*n, m) : initial_segment(m);
  };
  auto common = [this](CLI::App* a) {
    add_symbol(a);
    add_spec(a);
    a->add_option("--M", cfg_.M, "index bound")->required();
    a->add_option("--N", cfg_.n_text, "restrict to N-smooth indices");
    a->add_option("--iterations", cfg_.iterations, "power iteration cap")->capture_default_str();
  };
  auto* build = action(cmd, "build", "compressed matrix entries", [this, indices] {
    const auto phi = symbol();
    const auto w = spec();
    const auto a = build_matrix(phi, w, indices());
    Json rows = Json::array();
    for (const auto& e : a.matrix.entries()) {
      rows.push_back({{"row", a.indices[e.row]}, {"col", a.indices[e.col]},
                      {"re", e.value.real()}, {"im", e.value.imag()}});
    }
    doc_.result = {{"dimension", a.indices.size()}, {"nonzeros", rows.size()}, {"rows", rows}};
    doc_.columns = {"row", "col", "re", "im"};
  });
  common(build);

  auto* norm = action(cmd, "norm", "largest singular value of the compression", [this, indices] {
    const auto phi = symbol();
    const auto w = spec();
    const auto a = build_matrix(phi, w, indices());
    PowerIterationOptions power;
    power.seed = cfg_.seed;
    power.max_iterations = count("--iterations", cfg_.iterations);
    const auto sv = largest_singular_value(a.matrix, power);
    doc_.result = {{"dimension", a.indices.size()},
                   {"norm", sv.value},
                   {"iterations", sv.iterations},
                   {"restarted", sv.restarted}};
  });
  common(norm);

  auto* sandwich = action(cmd, "sandwich", "compression norms against half-plane sups", [this] {
    const auto phi = symbol();
    const auto w = spec();
    const double delta = real("--delta", cfg_.delta);
    const double Delta = real("--Delta", cfg_.Delta);
    const auto sizes = parse_list(cfg_.sizes, "--sizes");
    doc_.config["sizes"] = sizes;
    const auto n = n_optional();
    SandwichOptions opt;
    opt.seed = cfg_.seed;
    opt.power.seed = cfg_.seed;
    opt.power.max_iterations = count("--iterations", cfg_.iterations);
    opt.line_T = real("--T", cfg_.T);
    opt.line_samples = count("--samples", cfg_.samples);
    opt.torus_budget = count("--budget", cfg_.budget);
    opt.torus_rounds = count("--rounds", cfg_.rounds);
    opt.lower_slack = real("--lower-slack", cfg_.lower_slack);
    opt.upper_slack = real("--upper-slack", cfg_.upper_slack);
    const auto r = norm_sandwich_report(phi, w, delta, Delta, sizes, n, opt);
    Json rows = Json::array();
    for (const auto& row : r.rows) {
      rows.push_back({{"bound", row.bound}, {"dimension", row.dimension},
                      {"norm", row.compression_norm}});
    }
    doc_.result = {{"lower_Delta", r.lower_Delta},
                   {"line_lower_Delta", sup_json(r.line_lower_Delta)},
                   {"torus_lower_Delta", sup_json(r.torus_lower_Delta)},
                   {"upper_reference", r.upper_reference},
                   {"closed_form_delta", r.closed_form_delta ? Json(*r.closed_form_delta) : Json(nullptr)},
                   {"ceiling_delta", r.ceiling_delta},
                   {"monotone", r.monotone},
                   {"lower_ok", r.lower_ok},
                   {"upper_ok", r.upper_ok},
                   {"lower_gap", r.lower_gap},
                   {"upper_gap", r.upper_gap},
                   {"decay", condition_json(r.decay)},
                   {"growth", condition_json(r.growth.report)},
                   {"warnings", r.warnings},
                   {"rows", rows}};
    doc_.columns = {"bound", "dimension", "norm"};
  });
  add_symbol(sandwich);
  add_spec(sandwich);
  sandwich->add_option("--delta", cfg_.delta)->required();
  sandwich->add_option("--Delta", cfg_.Delta)->required();
  sandwich->add_option("--sizes", cfg_.sizes, "index bounds M, comma separated")->required();
  sandwich->add_option("--N", cfg_.n_text, "restrict to N-smooth indices");
  sandwich->add_option("--iterations", cfg_.iterations, "power iteration cap")->capture_default_str();
  sandwich->add_option("--T", cfg_.T, "line search half-width")->capture_default_str();
  sandwich->add_option("--samples", cfg_.samples)->capture_default_str();
  sandwich->add_option("--budget", cfg_.budget, "torus random samples")->capture_default_str();
  sandwich->add_option("--rounds", cfg_.rounds)->capture_default_str();
  sandwich->add_option("--lower-slack", cfg_.lower_slack)->capture_default_str();
  sandwich->add_option("--upper-slack", cfg_.upper_slack)->capture_default_str();
}

void Driver::register_sup() {
  auto* cmd = command("sup", "supremum estimates on half-planes");
  auto* line = action(cmd, "line", "max |phi| on sigma = delta, |t| <= T", [this] {
    const auto phi = symbol();
    const double delta = real("--delta", cfg_.delta);
    const double t = real("--T", cfg_.T);
    const auto e = sup_on_line(phi, delta, t, count("--samples", cfg_.samples));
    doc_.result = {{"sup", e.value}, {"argmax_t", e.argmax.at(0)}, {"evaluations", e.evaluations},
                   {"ceiling", triangle_ceiling(phi, delta)}};
  });
  add_symbol(line);
  line->add_option("--delta", cfg_.delta)->capture_default_str();
  line->add_option("--T", cfg_.T)->capture_default_str();
  line->add_option("--samples", cfg_.samples)->capture_default_str();

  auto* torus = action(cmd, "torus", "max over the Bohr lift on the polytorus", [this] {
    const auto phi = symbol();
    const double delta = real("--delta", cfg_.delta);
    const auto e = sup_on_torus(bohr_lift(phi), delta, count("--budget", cfg_.budget),
                                count("--rounds", cfg_.rounds), cfg_.seed);
    doc_.result = {{"sup", e.value}, {"argmax", e.argmax}, {"evaluations", e.evaluations},
                   {"ceiling", triangle_ceiling(phi, delta)}};
  });
  add_symbol(torus);
  torus->add_option("--delta", cfg_.delta)->capture_default_str();
  torus->add_option("--budget", cfg_.budget)->capture_default_str();
  torus->add_option("--rounds", cfg_.rounds)->capture_default_str();

  auto* two = action(cmd, "two-term", "closed form for 1 + b q^{-s}", [this] {
    const Complex b = complex_flag("--b", cfg_.b);
    const auto q = count("--q", cfg_.q);
    const double delta = real("--delta", cfg_.delta);
    doc_.result = {{"sup", two_term_sup(b, q, delta)}};
  });
  two->add_option("--b", cfg_.b, "coefficient (re or re,im)")->required();
  two->add_option("--q", cfg_.q)->required();
  two->add_option("--delta", cfg_.delta)->capture_default_str();
}

void Driver::register_measure() {
  auto* cmd = command("measure", "representing measures for weight sequences");
  auto atoms_rows = [](const MeasureFit& fit) {
    Json rows = Json::array();
    for (const auto& a : fit.atoms) rows.push_back({{"sigma", a.sigma}, {"mass", a.mass}});
    return rows;
  };
  auto* fit = action(cmd, "fit", "Chebyshev fit by atoms on the grid", [this, atoms_rows] {
    const auto w = spec();
    const auto f = fit_measure(w, n_scalar(), grid());
    if (f.status == FitStatus::kIterationCapped) {
      throw ConvergenceError("measure fit: simplex hit its pivot cap");
    }
    doc_.result = {{"n_max", f.n_max},
                   {"residual", f.residual},
                   {"lp_objective", f.lp_objective},
                   {"status", std::string(to_string(f.status))},
                   {"pivots", f.pivots},
                   {"rows", atoms_rows(f)}};
    doc_.columns = {"sigma", "mass"};
  });
  add_spec(fit);
  fit->add_option("--N", cfg_.n_text)->required();
  fit->add_option("--grid", cfg_.grid, "lo:hi:step")->capture_default_str();

  auto* curve = action(cmd, "curve", "fit residual for each N in a list", [this] {
    const auto w = spec();
    const auto ns = parse_list(cfg_.n_text, "--N");
    doc_.config["N"] = ns;
    const auto points = residual_curve(w, ns, grid());
    Json rows = Json::array();
    for (const auto& p : points) {
      if (p.status == FitStatus::kIterationCapped) {
        throw ConvergenceError("measure curve: simplex hit its pivot cap at N = " +
                               std::to_string(p.n_max));
      }
      rows.push_back({{"N", p.n_max}, {"residual", p.residual},
                      {"status", std::string(to_string(p.status))}});
    }
    doc_.result = {{"rows", rows}};
    doc_.columns = {"N", "residual", "status"};
  });
  add_spec(curve);
  curve->add_option("--N", cfg_.n_text, "increasing list, comma separated")->required();
  curve->add_option("--grid", cfg_.grid, "lo:hi:step")->capture_default_str();

  auto* jensen = action(cmd, "jensen", "w_{n^2} = w_n^2 for 2 <= n <= max", [this] {
    const auto w = spec();
    const auto r = jensen_check(w, count("--max", cfg_.max));
    doc_.result = {{"pass", r.pass}, {"bound", r.bound}};
    if (r.witness) {
      doc_.result["witness"] = {{"n", r.witness->first},
                                {"w_at_n_squared", r.witness->lhs},
                                {"w_n_squared", r.witness->rhs}};
    } else {
      doc_.result["witness"] = nullptr;
    }
    doc_.result["sigma_star"] = r.sigma_star ? Json(*r.sigma_star) : Json(nullptr);
    doc_.result["max_deviation"] = r.max_deviation ? Json(*r.max_deviation) : Json(nullptr);
  });
  add_spec(jensen);
  jensen->add_option("--max,--M", cfg_.max, "largest n")->required();

  auto* growth = action(cmd, "growth", "dyadic-window growth table", [this] {
    const auto kind = field("--kind", [&] { return parse_growth_kind(cfg_.kind); });
    doc_.config["kind"] = std::string(to_string(kind));
    const auto rows_in = growth_report(kind, count("--M", cfg_.M));
    Json rows = Json::array();
    for (const auto& r : rows_in) {
      Json row = {{"window_lo", r.window_lo}, {"window_hi", r.window_hi},
                  {"high", r.high}, {"high_at", r.high_at}};
      if (kind == GrowthKind::kTotientRatio) {
        row["low"] = r.low;
        row["low_at"] = r.low_at;
      }
      rows.push_back(row);
    }
    doc_.result = {{"kind", std::string(to_string(kind))}, {"rows", rows}};
    doc_.columns = {"window_lo", "window_hi", "high", "high_at"};
    if (kind == GrowthKind::kTotientRatio) {
      doc_.columns.push_back("low");
      doc_.columns.push_back("low_at");
    }
  });
  growth->add_option("--kind", cfg_.kind, "gronwall or totient_ratio")->capture_default_str();
  growth->add_option("--M", cfg_.M)->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dirichlet-lab: weighted Dirichlet series computations"};
  app.set_version_flag("--version", DIRICHLET_VERSION);
  Driver driver(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const Document doc = driver.run();
    std::ostringstream text;
    if (driver.config().format == "csv") {
      lab::write_csv(text, doc);
    } else {
      lab::write_json(text, doc);
    }
    if (driver.config().out.empty()) {
      std::cout << text.str();
    } else {
      std::ofstream file(driver.config().out, std::ios::binary);
      if (!file) throw ValidationError("--out: cannot open " + driver.config().out);
      file << text.str();
      if (!file) throw ValidationError("--out: write failed for " + driver.config().out);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "not converged: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
