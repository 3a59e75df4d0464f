#include "dicke/search.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace dicke::search;

TEST_CASE("golden-section search") {
  CHECK(golden_section_minimize([](double x) { return (x - 0.3) * (x - 0.3); }, -1.0, 2.0, 1e-12) ==
        doctest::Approx(0.3).epsilon(1e-10));
  CHECK(golden_section_maximize([](double x) { return std::exp(-x) * std::sinh(0.5 * x); }, 0.0, 5.0,
                                1e-12) == doctest::Approx(std::log(3.0)).epsilon(1e-7));
}

TEST_CASE("bisection") {
  CHECK(bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-13) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(bisect([](double x) { return x; }, 0.0, 1.0) == 0.0);
  CHECK_THROWS_AS(bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("interior extrema of a sampled function") {
  // sin on (0, 4 pi): max at pi/2, 5pi/2; min at 3pi/2, 7pi/2.
  const auto pts = interior_extrema([](double x) { return std::sin(x); }, 0.0, 4.0 * std::numbers::pi);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].kind == ExtremumKind::Maximum);
  CHECK(pts[1].kind == ExtremumKind::Minimum);
  CHECK(pts[0].t == doctest::Approx(std::numbers::pi / 2).epsilon(1e-8));
  CHECK(pts[3].t == doctest::Approx(3.5 * std::numbers::pi).epsilon(1e-8));
  CHECK(pts[3].value == doctest::Approx(-1.0).epsilon(1e-12));

  CHECK(interior_extrema([](double x) { return std::exp(-x); }, 0.0, 10.0).empty());
  CHECK(interior_extrema([](double) { return 0.0; }, 0.0, 10.0).empty());
  // Endpoint maxima are not interior.
  CHECK(interior_extrema([](double x) { return -x * x; }, 0.0, 1.0).empty());
}

TEST_CASE("sign changes") {
  const auto ch = sign_changes([](double x) { return std::cos(x); }, 0.0, 2.0 * std::numbers::pi, 1001);
  REQUIRE(ch.size() == 2);
  CHECK(ch[0].downward);
  CHECK_FALSE(ch[1].downward);
  CHECK(ch[0].t == doctest::Approx(std::numbers::pi / 2).epsilon(1e-9));
  CHECK(ch[1].t == doctest::Approx(1.5 * std::numbers::pi).epsilon(1e-9));
  CHECK(sign_changes([](double x) { return x + 1.0; }, 0.0, 1.0, 11).empty());
}
