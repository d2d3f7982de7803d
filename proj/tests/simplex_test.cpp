#include <doctest.h>

#include <vector>

#include "dirichlet/error.hpp"
#include "dirichlet/simplex.hpp"

using namespace dirichlet;

TEST_SUITE("simplex") {

TEST_CASE("textbook maximization") {
  // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36
  const std::vector<double> g{1, 0, 0, 2, 3, 2};
  const std::vector<double> c{3, 5};
  const std::vector<double> b{4, 12, 18};
  const auto r = lp::maximize(g, c, b);
  REQUIRE(r.status == lp::Status::kOptimal);
  CHECK(r.objective == doctest::Approx(36.0));
  CHECK(r.primal[0] == doctest::Approx(2.0));
  CHECK(r.primal[1] == doctest::Approx(6.0));
  // Shadow prices of the dual problem: (0, 3/2, 1); strong duality b.y = c.x.
  CHECK(r.duals[0] == doctest::Approx(0.0));
  CHECK(r.duals[1] == doctest::Approx(1.5));
  CHECK(r.duals[2] == doctest::Approx(1.0));
}

TEST_CASE("unbounded and degenerate problems") {
  const std::vector<double> g{1, -1};
  const std::vector<double> c{1, 1};
  const std::vector<double> b{1};
  CHECK(lp::maximize(g, c, b).status == lp::Status::kUnbounded);

  // All right-hand sides zero: optimum 0 at the origin.
  const std::vector<double> g2{1, -1, -1, 1, 1, 1};
  const std::vector<double> c2{1, 0};
  const std::vector<double> b2{0, 0, 0};
  const auto r = lp::maximize(g2, c2, b2);
  CHECK(r.status == lp::Status::kOptimal);
  CHECK(r.objective == doctest::Approx(0.0));
}

TEST_CASE("pivot cap is reported") {
  const std::vector<double> g{1, 0, 0, 2, 3, 2};
  const std::vector<double> c{3, 5};
  const std::vector<double> b{4, 12, 18};
  lp::Options opt;
  opt.max_pivots = 1;
  CHECK(lp::maximize(g, c, b, opt).status == lp::Status::kIterationCapped);
}

TEST_CASE("input validation") {
  const std::vector<double> g{1, 2};
  const std::vector<double> c{1, 1};
  CHECK_THROWS_AS(lp::maximize(g, c, std::vector<double>{-1.0}), ValidationError);
  CHECK_THROWS_AS(lp::maximize(g, c, std::vector<double>{1.0, 1.0}), ValidationError);
}

}  // TEST_SUITE
