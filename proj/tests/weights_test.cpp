#include <doctest.h>

#include <cmath>

#include "dirichlet/error.hpp"
#include "dirichlet/weights.hpp"

using namespace dirichlet;
namespace wk = dirichlet::weight_kinds;

TEST_SUITE("weights") {

TEST_CASE("weight examples") {
  CHECK(weight(wk::AtomicMeasure{{{0.0, 1.0}}}, 17) == 1.0);
  CHECK(weight(wk::ReciprocalDivisorCount{}, 12) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(weight(wk::PowerLaw{0.5}, 4) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(weight(wk::ReciprocalDivisorSum{}, 4) == 1.0 / 7.0);
  CHECK(weight(wk::ReciprocalTotient{}, 12) == 0.25);
}

TEST_CASE("w_1 is 1 except for atomic measures") {
  for (const char* text : {"constant", "powerlaw:0.3", "recip-d", "recip-sigma", "recip-phi", "mult:2^1=2"}) {
    CHECK(weight(parse_weight_spec(text), 1) == 1.0);
  }
  CHECK(weight(parse_weight_spec("atoms:0:0.7,0.3:0.3"), 1) == doctest::Approx(1.0));
  CHECK(weight(parse_weight_spec("atoms:0:2,1:0.5"), 1) == doctest::Approx(2.5));
}

TEST_CASE("spec text round trip") {
  for (const char* text : {"constant", "powerlaw:0.5", "atoms:0:0.7,0.3:0.3", "recip-d", "recip-sigma",
                           "recip-phi", "mult:2^1=2,3^2=0.5"}) {
    CAPTURE(text);
    CHECK(to_string(parse_weight_spec(text)) == text);
  }
  for (const char* bad : {"", "powerlaw", "powerlaw:-1", "powerlaw:x", "atoms:0", "atoms:0:-1", "mult:4^1=2",
                          "mult:2^0=3", "mult:2^1=0", "zeta"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_weight_spec(bad), ValidationError);
  }
}

TEST_CASE("single atom equals the power law") {
  const WeightSpec atom = wk::AtomicMeasure{{{0.3, 1.0}}};
  const WeightSpec power = wk::PowerLaw{0.3};
  for (std::uint64_t n = 1; n <= 1000; ++n) REQUIRE(weight(atom, n) == weight(power, n));
}

TEST_CASE("multiplicative rule is multiplicative") {
  const auto spec = parse_weight_spec("mult:2^1=2,2^2=0.3,3^1=0.7,5^3=1.5");
  const auto r = multiplicativity_report([&](std::uint64_t n) { return weight(spec, n); }, 200, false);
  CHECK(r.pass);
  CHECK(weight(spec, 12) == doctest::Approx(0.3 * 0.7));
  CHECK(weight(spec, 7) == 1.0);
}

TEST_CASE("prime power weights match full evaluation") {
  for (const char* text : {"powerlaw:0.25", "recip-d", "recip-sigma", "recip-phi"}) {
    const auto spec = parse_weight_spec(text);
    for (std::uint64_t p : {2ULL, 3ULL, 7ULL}) {
      std::uint64_t pk = 1;
      for (unsigned k = 0; k <= 8; ++k) {
        CAPTURE(text);
        CHECK(prime_power_weight(spec, p, k) == doctest::Approx(weight(spec, pk)).epsilon(1e-14));
        pk *= p;
      }
    }
    // Far beyond 64-bit p^k.
    CHECK(std::isfinite(prime_power_inverse_weight(spec, 1'000'003, 6)));
  }
}

TEST_CASE("measure_weights") {
  const std::vector<wk::Atom> atoms{{0.0, 0.5}, {1.0, 0.5}};
  const auto w = measure_weights(atoms, 4);
  REQUIRE(w.size() == 5);
  CHECK(w[1] == 1.0);
  CHECK(w[2] == doctest::Approx(0.5 + 0.5 / 4));
  CHECK(w[4] == doctest::Approx(0.5 + 0.5 / 16));
}

TEST_CASE("prime power decay examples") {
  const auto constant = check_prime_power_decay(wk::Constant{}, 0.0, 100, 10);
  CHECK(constant.pass);
  CHECK(constant.witnesses.empty());

  CHECK(check_prime_power_decay(wk::ReciprocalDivisorSum{}, 0.5, 100, 10).pass);
  CHECK(check_prime_power_decay(wk::ReciprocalDivisorCount{}, 0.0, 100, 10).pass);

  const auto phi = check_prime_power_decay(wk::ReciprocalTotient{}, 0.5, 100, 10);
  CHECK_FALSE(phi.pass);
  CHECK(phi.witnesses.size() == 25);  // one per prime <= 100, all at k = 1
  for (const auto& w : phi.witnesses) {
    CHECK(w.second == 1);
    CHECK(w.lhs == doctest::Approx(1.0 / static_cast<double>(w.first - 1)));
    CHECK(w.rhs == doctest::Approx(1.0 / static_cast<double>(w.first)));
    CHECK(w.lhs > w.rhs);
  }
}

TEST_CASE("power law decay: equality at delta, strict failure above") {
  for (double delta : {0.0, 0.25, 0.5}) {
    CHECK(check_prime_power_decay(wk::PowerLaw{delta}, delta, 50, 6).pass);
    CHECK_FALSE(check_prime_power_decay(wk::PowerLaw{delta}, delta + 0.01, 50, 6).pass);
  }
}

TEST_CASE("decay passes at every smaller level") {
  for (double d : {0.0, 0.1, 0.25, 0.4, 0.5}) {
    CHECK(check_prime_power_decay(wk::ReciprocalDivisorSum{}, d, 100, 10).pass);
  }
}

TEST_CASE("growth bound examples") {
  const auto constant = check_growth_bound(wk::Constant{}, 0.5, 10'000);
  CHECK(constant.constant == 1.0);
  CHECK(constant.argmax == 1);
  CHECK(constant.report.pass);

  // Independent sweep: C = 13.5026 at n = 55440, and the maximum sits in the
  // second half of the range, so the heuristic cannot call it bounded.
  const auto d = check_growth_bound(wk::ReciprocalDivisorCount{}, 0.1, 100'000);
  CHECK(d.constant == doctest::Approx(13.502575108194335).epsilon(1e-12));
  CHECK(d.argmax == 55440);
  CHECK(d.second_half_ratio == 1.0);
  CHECK_FALSE(d.report.pass);

  const auto phi = check_growth_bound(wk::ReciprocalTotient{}, 0.4, 10'000);
  CHECK(phi.argmax > 5'000);
  CHECK_FALSE(phi.report.pass);
}

TEST_CASE("tail report examples") {
  const auto zeta2 = tail_report(wk::Constant{}, 1.0, 100'000);
  CHECK(std::abs(zeta2.partial_sum - M_PI * M_PI / 6) < 1e-4);
  CHECK(zeta2.verdict == TailVerdict::kConverging);

  CHECK(tail_report(wk::Constant{}, 0.25, 100'000).verdict == TailVerdict::kDiverging);

  const auto d = tail_report(wk::ReciprocalDivisorCount{}, 0.75, 100'000);
  CHECK(d.verdict == TailVerdict::kConverging);
  // sum d(n) n^{-1.5} <= (sum n^{-0.75})^2 termwise, so the same holds for partial sums.
  double s = 0.0;
  for (int n = 1; n <= 100'000; ++n) s += std::pow(n, -0.75);
  CHECK(d.partial_sum <= s * s);
}

TEST_CASE("decade classification") {
  CHECK(classify_decades(0.1, 1.0) == TailVerdict::kConverging);
  CHECK(classify_decades(1.0, 1.0) == TailVerdict::kDiverging);
  CHECK(classify_decades(0.7, 1.0) == TailVerdict::kInconclusive);
}

}  // TEST_SUITE
