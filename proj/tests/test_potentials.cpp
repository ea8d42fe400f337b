#include "doctest.h"

#include "siegert/core.hpp"
#include "siegert/potentials.hpp"

#include <cmath>
#include <random>

using namespace siegert;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::unsupported;
}

} // namespace

TEST_CASE("square well values") {
  const auto p = make_square_well(-5.0, 3.0);
  CHECK(evaluate(p, 0.0) == -5.0);
  CHECK(evaluate(p, 2.999) == -5.0);
  CHECK(evaluate(p, 3.5) == 0.0);
  CHECK(evaluate(p, -3.5) == 0.0);
  CHECK(p.a_minus == -3.0);
  CHECK(p.a_plus == 3.0);
  CHECK(p.b_minus == -3.0);
  CHECK(p.b_plus == 3.0);
  CHECK(family_name(p) == "square-well");
}

TEST_CASE("double barrier values and geometry") {
  const auto p = make_double_barrier(1.0, 0.1);
  CHECK(evaluate(p, 0.0) == 0.0);
  CHECK(evaluate(p, 3.1623) == doctest::Approx(1.8393972).epsilon(1e-6));
  CHECK(evaluate(p, -3.1623) == doctest::Approx(1.8393972).epsilon(1e-6));
  const auto [bl, br] = barrier_maxima(p);
  CHECK(br == doctest::Approx(3.16228).epsilon(1e-5));
  CHECK(bl == doctest::Approx(-br));
  // b is a local maximum
  CHECK(evaluate(p, br) > evaluate(p, br - 1e-3));
  CHECK(evaluate(p, br) > evaluate(p, br + 1e-3));
  CHECK(p.a_minus == -20.0);
  CHECK(p.a_plus == 20.0);
}

TEST_CASE("double barrier effective range") {
  const auto p = make_double_barrier(1.0, 0.1);
  const auto [lo, hi] = effective_range(p, 1e-15);
  CHECK(hi == doctest::Approx(20.0).epsilon(0.01));
  CHECK(lo == doctest::Approx(-hi));
  // Tail below tolerance beyond the range.
  for (double x = hi + 1e-6; x < 60.0; x += 0.37)
    CHECK(std::abs(evaluate(p, x)) < 1e-15);
  // Smaller tolerances give wider ranges.
  CHECK(effective_range(p, 1e-20).second > hi);
  CHECK(kind_of([&] { effective_range(p, 0.0); }) == ErrorKind::domain);
}

TEST_CASE("delta shell geometry and wall") {
  const auto p = make_delta_shell(10.0, 1.0);
  CHECK(p.hard_wall_left.has_value());
  CHECK(*p.hard_wall_left == 0.0);
  REQUIRE(p.delta_terms.size() == 1);
  CHECK(p.delta_terms[0].position == 1.0);
  CHECK(p.delta_terms[0].strength == 10.0);
  CHECK(evaluate(p, 0.5) == 0.0);
  CHECK(evaluate(p, 3.0) == 0.0);
  CHECK(in_wall_region(p, -0.5));
  CHECK_FALSE(in_wall_region(p, 0.0));
  CHECK(kind_of([&] { evaluate(p, -0.5); }) == ErrorKind::wall);
  CHECK(barrier_maxima(p) == std::pair{0.0, 1.0});
  CHECK(effective_range(p, 1e-12) == std::pair{0.0, 1.0});
}

TEST_CASE("parameter validation") {
  CHECK(kind_of([] { make_square_well(5.0, 3.0); }) == ErrorKind::config);
  CHECK(kind_of([] { make_square_well(-5.0, 0.0); }) == ErrorKind::config);
  CHECK(kind_of([] { make_delta_shell(-1.0, 1.0); }) == ErrorKind::config);
  CHECK(kind_of([] { make_double_barrier(1.0, 0.0); }) == ErrorKind::config);
  auto p = make_double_barrier(1.0, 0.1);
  p.b_plus = 25.0;
  CHECK(kind_of([&] { p.validate(); }) == ErrorKind::config);
}

TEST_CASE("symmetric potentials are even") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dx(0.0, 25.0);
  const auto sw = make_square_well(-5.0, 3.0);
  const auto db = make_double_barrier(1.0, 0.1);
  CHECK(is_symmetric(sw));
  CHECK(is_symmetric(db));
  CHECK_FALSE(is_symmetric(make_delta_shell(10.0, 1.0)));
  for (int i = 0; i < 500; ++i) {
    const double x = dx(rng);
    CHECK(evaluate(sw, x) == evaluate(sw, -x));
    CHECK(evaluate(db, x) == evaluate(db, -x));
  }
}

TEST_CASE("unmatched delta terms break symmetry") {
  auto p = make_double_barrier(1.0, 0.1);
  p.delta_terms.push_back({1.0, 0.5});
  CHECK_FALSE(is_symmetric(p));
  p.delta_terms.push_back({-1.0, 0.5});
  CHECK(is_symmetric(p));
}

TEST_CASE("tabulated interpolation and range") {
  const auto p = make_tabulated({-3, -2, -1, 0, 1, 2, 3}, {0, 1, 0.5, 0.2, 0.5, 1, 0});
  CHECK(family_name(p) == "tabulated");
  CHECK(evaluate(p, -1.5) == doctest::Approx(0.75));
  CHECK(evaluate(p, 0.5) == doctest::Approx(0.35));
  CHECK(kind_of([&] { evaluate(p, 3.5); }) == ErrorKind::range);
  CHECK(barrier_maxima(p) == std::pair{-2.0, 2.0});
  CHECK(effective_range(p, 1e-12) == std::pair{-3.0, 3.0});
  CHECK(is_symmetric(p));
}

TEST_CASE("tabulated structure and tail errors") {
  // Single bump: no confinement, falls back to the cutoffs.
  const auto bump = make_tabulated({-2, -1, 0, 1, 2}, {0, 0.5, 1, 0.5, 0});
  CHECK(kind_of([&] { barrier_maxima(bump); }) == ErrorKind::structure);
  CHECK(bump.b_minus == bump.a_minus);
  // Potential not decaying at the ends.
  CHECK(kind_of([] { make_tabulated({0, 1, 2}, {1, 1, 1}); }) == ErrorKind::range);
  // Non-monotone abscissae.
  CHECK(kind_of([] { make_tabulated({0, 2, 1}, {0, 1, 0}); }) == ErrorKind::config);
}

TEST_CASE("tabulated trap with a hard wall") {
  const auto p = make_tabulated({0, 1, 2, 3, 4}, {0, 0.2, 2, 0.3, 0}, 0.0);
  CHECK(p.a_minus == 0.0);
  CHECK(p.b_minus == 0.0);
  CHECK(p.b_plus == 2.0);
  CHECK(p.a_plus == 4.0);
  CHECK_FALSE(is_symmetric(p));
}
