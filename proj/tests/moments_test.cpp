#include <doctest.h>

#include <cmath>

#include "dirichlet/arith.hpp"
#include "dirichlet/error.hpp"
#include "dirichlet/moments.hpp"

using namespace dirichlet;
namespace wk = dirichlet::weight_kinds;

namespace {

// Residuals at N = 10, 50, 100, 200 on [0, 3] step 0.01, from an independent
// LP solve (HiGHS).
struct Baseline {
  const char* spec;
  double residual[4];
};

const Baseline kBaselines[] = {
    {"recip-d", {0.1250032334301743, 0.1996349676673523, 0.20833333333333334, 0.22222222222222224}},
    {"recip-sigma",
     {0.029828157307643533, 0.02982815730766726, 0.029828157307899658, 0.02982815730777528}},
    {"recip-phi", {0.20633754555136713, 0.2063375455513944, 0.20633754555139336, 0.20633754555139747}},
};

void check_replay(const WeightSpec& spec, const MeasureFit& fit) {
  const auto replay = measure_weights(fit.atoms, fit.n_max);
  for (std::uint64_t n = 1; n <= fit.n_max; ++n) {
    REQUIRE(std::abs(replay[n] - weight(spec, n)) <= fit.residual + 1e-12);
  }
  for (const auto& a : fit.atoms) REQUIRE(a.mass > 0.0);
}

}  // namespace

TEST_SUITE("moments") {

TEST_CASE("sigma grid") {
  const SigmaGrid g(0.0, 3.0, 0.01);
  CHECK(g.nodes().size() == 301);
  CHECK(g.nodes().front() == 0.0);
  CHECK(g.nodes().back() == doctest::Approx(3.0));
  CHECK(SigmaGrid::parse("0:1:0.25").nodes().size() == 5);
  CHECK(SigmaGrid::parse("0:1:0.25").to_string() == "0:1:0.25");
  CHECK_THROWS_AS(SigmaGrid(1.0, 0.5, 0.1), ValidationError);
  CHECK_THROWS_AS(SigmaGrid(0.0, 1.0, 0.0), ValidationError);
  CHECK_THROWS_AS(SigmaGrid(0.0, 1.0, 2.0), ValidationError);
  CHECK_THROWS_AS(SigmaGrid::parse("0:1"), ValidationError);
}

TEST_CASE("exact representations fit with zero residual") {
  const auto power = fit_measure(wk::PowerLaw{0.3}, 30, SigmaGrid(0.0, 3.0, 0.01));
  CHECK(power.status == FitStatus::kOptimal);
  CHECK(power.residual <= 1e-10);
  REQUIRE(power.atoms.size() == 1);
  CHECK(power.atoms[0].sigma == doctest::Approx(0.3));
  CHECK(power.atoms[0].mass == doctest::Approx(1.0).epsilon(1e-10));

  const auto constant = fit_measure(wk::Constant{}, 30, SigmaGrid(0.0, 3.0, 0.05));
  CHECK(constant.residual <= 1e-10);
  REQUIRE(constant.atoms.size() == 1);
  CHECK(constant.atoms[0].sigma == 0.0);
  CHECK(constant.atoms[0].mass == doctest::Approx(1.0).epsilon(1e-10));

  const auto two = parse_weight_spec("atoms:0.5:0.25,1.5:0.75");
  const auto fit = fit_measure(two, 40, SigmaGrid(0.0, 2.0, 0.25));
  CHECK(fit.residual <= 1e-10);
  check_replay(two, fit);
}

TEST_CASE("residual curve baselines") {
  const SigmaGrid grid(0.0, 3.0, 0.01);
  const std::vector<std::uint64_t> ns{10, 50, 100, 200};
  for (const auto& b : kBaselines) {
    CAPTURE(b.spec);
    const auto spec = parse_weight_spec(b.spec);
    const auto curve = residual_curve(spec, ns, grid);
    REQUIRE(curve.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(curve[i].status == FitStatus::kOptimal);
      CHECK(curve[i].residual == doctest::Approx(b.residual[i]).epsilon(1e-8));
      if (i > 0) CHECK(curve[i].residual >= curve[i - 1].residual - 1e-12);
    }
    CHECK(curve.back().residual > 0.0);
  }
}

TEST_CASE("fit certificate") {
  const SigmaGrid grid(0.0, 3.0, 0.05);
  for (const char* text : {"recip-d", "recip-sigma", "recip-phi", "mult:2^1=0.4,3^1=0.2"}) {
    const auto spec = parse_weight_spec(text);
    const auto fit = fit_measure(spec, 60, grid);
    CAPTURE(text);
    check_replay(spec, fit);
    // Primal (residual of the returned atoms) and dual objectives agree.
    CHECK(fit.residual == doctest::Approx(fit.lp_objective).epsilon(1e-9));
  }
}

TEST_CASE("refining the grid never increases the residual") {
  const auto spec = parse_weight_spec("recip-d");
  const double coarse = fit_measure(spec, 50, SigmaGrid(0.0, 3.0, 0.1)).residual;
  const double fine = fit_measure(spec, 50, SigmaGrid(0.0, 3.0, 0.05)).residual;
  CHECK(fine <= coarse + 1e-12);
}

TEST_CASE("curve rejects unsorted bounds") {
  const std::vector<std::uint64_t> ns{50, 10};
  CHECK_THROWS_AS(residual_curve(wk::Constant{}, ns, SigmaGrid(0.0, 1.0, 0.5)), ValidationError);
  CHECK_THROWS_AS(fit_measure(wk::Constant{}, 0, SigmaGrid(0.0, 1.0, 0.5)), ValidationError);
}

TEST_CASE("Jensen check") {
  for (double delta : {0.0, 0.3, 0.5}) {
    const auto r = jensen_check(wk::PowerLaw{delta}, 100);
    CHECK(r.pass);
    REQUIRE(r.sigma_star);
    CHECK(*r.sigma_star == doctest::Approx(delta));
    CHECK(*r.max_deviation < 1e-14);
  }
  const auto d = jensen_check(wk::ReciprocalDivisorCount{}, 10);
  CHECK_FALSE(d.pass);
  REQUIRE(d.witness);
  CHECK(d.witness->first == 2);
  CHECK(d.witness->lhs == doctest::Approx(1.0 / 3.0));
  CHECK(d.witness->rhs == doctest::Approx(0.25));

  const auto s = jensen_check(wk::ReciprocalDivisorSum{}, 10);
  CHECK_FALSE(s.pass);
  REQUIRE(s.witness);
  CHECK(s.witness->first == 2);
  CHECK(s.witness->lhs == doctest::Approx(1.0 / 7.0));
  CHECK(s.witness->rhs == doctest::Approx(1.0 / 9.0));

  CHECK_THROWS_AS(jensen_check(wk::Constant{}, 1), ValidationError);
}

TEST_CASE("a passing Jensen check implies a feasible point mass") {
  const auto spec = wk::PowerLaw{0.45};
  const auto r = jensen_check(spec, 50);
  REQUIRE(r.pass);
  CHECK(fit_measure(spec, 50, SigmaGrid(0.0, 3.0, 0.05)).residual <= 1e-8);
}

TEST_CASE("totient ratio report") {
  const auto rows = growth_report(GrowthKind::kTotientRatio, 100'000);
  REQUIRE_FALSE(rows.empty());
  const auto& last = rows.back();
  CHECK(last.window_hi == 100'000);
  CHECK(last.high_at == 99991);  // largest prime <= 10^5
  CHECK(last.high == doctest::Approx(1.0 - 1.0 / 99991));
  CHECK(last.low_at == 30030);
  CHECK(last.low == doctest::Approx((1.0 / 2) * (2.0 / 3) * (4.0 / 5) * (6.0 / 7) * (10.0 / 11) * (12.0 / 13)));
  for (const auto& r : rows) {
    CHECK(default_sieve().is_prime(r.high_at));
  }
}

TEST_CASE("Gronwall report") {
  const auto rows = growth_report(GrowthKind::kGronwall, 1'000'000);
  REQUIRE(rows.size() >= 18);
  CHECK(rows.front().window_lo == 3);
  CHECK(rows.back().window_hi == 1'000'000);
  // Large windows sit within a modest band of e^gamma; small ones overshoot.
  const double e_gamma = std::exp(0.5772156649015329);
  CHECK(rows.back().high < e_gamma);
  CHECK(rows.back().high > 0.9 * e_gamma);
  CHECK(rows.front().high > e_gamma);
  for (const auto& r : rows) {
    const double n = static_cast<double>(r.high_at);
    CHECK(r.high == doctest::Approx(static_cast<double>(divisor_sum(r.high_at)) / (n * std::log(std::log(n)))));
  }
  CHECK_THROWS_AS(growth_report(GrowthKind::kGronwall, 99), ValidationError);
  CHECK(parse_growth_kind("totient_ratio") == GrowthKind::kTotientRatio);
  CHECK_THROWS_AS(parse_growth_kind("x"), ValidationError);
}

}  // TEST_SUITE
