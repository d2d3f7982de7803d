#include <doctest.h>

#include "dirichlet/error.hpp"
#include "dirichlet/text.hpp"

using namespace dirichlet;

TEST_SUITE("text") {

TEST_CASE("shortest round-trip doubles") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.0) == "2");
  CHECK(parse_double(format_double(1.0 / 3.0), "x") == 1.0 / 3.0);
}

TEST_CASE("parsers name the field") {
  CHECK(parse_uint("42", "n") == 42);
  CHECK(parse_double(" -1.5e3 ", "x") == -1500.0);
  CHECK(parse_complex("1.5,-2", "z") == std::complex<double>(1.5, -2.0));
  CHECK(parse_complex("3", "z") == std::complex<double>(3.0, 0.0));
  try {
    parse_uint("-3", "budget");
    FAIL("expected a ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("budget") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_double("1.5x", "x"), ValidationError);
  CHECK_THROWS_AS(parse_double("nan", "x"), ValidationError);
  CHECK_THROWS_AS(parse_complex("1,2,3", "z"), ValidationError);
}

TEST_CASE("split and trim") {
  const auto parts = split("a,b,,c", ',');
  REQUIRE(parts.size() == 4);
  CHECK(parts[2].empty());
  CHECK(trim("  x y \t") == "x y");
}

}  // TEST_SUITE
