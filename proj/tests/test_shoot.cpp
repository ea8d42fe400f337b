#include "doctest.h"

#include "siegert/analytic.hpp"
#include "siegert/shoot.hpp"
#include "siegert/width.hpp"

#include <cmath>

using namespace siegert;

namespace {

const PotentialSpec& barrier() {
  static const PotentialSpec p = make_double_barrier(1.0, 0.1);
  return p;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::unsupported;
}

int sign_changes(const PotentialSpec& p, double lo, double hi, int n, const Grid& g) {
  int count = 0;
  double prev = symmetry_criterion(p, lo, g, Units{});
  for (int i = 1; i < n; ++i) {
    const double cur = symmetry_criterion(p, lo + (hi - lo) * i / (n - 1), g, Units{});
    if (prev * cur < 0.0)
      ++count;
    prev = cur;
  }
  return count;
}

} // namespace

TEST_CASE("method names") {
  CHECK(to_string(Method::symmetric_shooting) == "symmetric-shooting");
  CHECK(to_string(Method::one_sided) == "one-sided");
  CHECK(to_string(Method::exact_delta_shell) == "exact-delta-shell");
}

TEST_CASE("grids and scan density") {
  const auto g = symmetric_grid(barrier());
  CHECK(g.x_start == -20.0);
  CHECK(g.x_end == 0.0);
  CHECK(g.n_steps == default_n_steps);
  const auto f = full_grid(make_delta_shell(10.0, 1.0), 1000);
  CHECK(f.x_start == 0.0);
  CHECK(f.x_end == 1.0);
  CHECK(default_scan_points(0.1, 2.0) == 381);
  CHECK(default_scan_points(1.0, 1.001) == 2);
  CHECK(kind_of([] { symmetric_grid(make_delta_shell(10.0, 1.0)); }) == ErrorKind::config);
}

TEST_CASE("criterion changes sign once around the ground resonance") {
  CHECK(sign_changes(barrier(), 0.3, 0.6, 61, symmetric_grid(barrier())) == 1);
}

TEST_CASE("criterion changes sign across the square-well resonance") {
  const auto p = make_square_well(-5.0, 3.0);
  const auto g = symmetric_grid(p);
  CHECK(symmetry_criterion(p, 1.65, g, Units{}) * symmetry_criterion(p, 1.78, g, Units{}) < 0.0);
}

TEST_CASE("bracket scan of the double barrier") {
  const auto g = symmetric_grid(barrier());
  const auto brackets = bracket_scan(barrier(), 0.1, 2.0, 200, g, Units{});
  REQUIRE(brackets.size() == 3);
  const double expected[] = {0.4601, 1.2804, 1.88};
  for (int i = 0; i < 3; ++i) {
    CHECK(brackets[i].e_low < brackets[i].e_high);
    CHECK(0.5 * (brackets[i].e_low + brackets[i].e_high) == doctest::Approx(expected[i]).epsilon(0.01));
  }
}

TEST_CASE("bracket scan below the ground state is empty") {
  const auto g = symmetric_grid(barrier());
  CHECK(bracket_scan(barrier(), 0.01, 0.1, 50, g, Units{}).empty());
  CHECK(sign_changes(barrier(), 0.01, 0.1, 400, g) == 0);
  CHECK(kind_of([&] { bracket_scan(barrier(), 1.0, 1.0, 10, g, Units{}); }) == ErrorKind::domain);
  CHECK(kind_of([&] { bracket_scan(barrier(), 0.5, 1.0, 1, g, Units{}); }) == ErrorKind::domain);
}

TEST_CASE("double barrier resonances by symmetric shooting") {
  const auto g = symmetric_grid(barrier());
  const auto brackets = bracket_scan(barrier(), 0.1, 2.0, 200, g, Units{});
  REQUIRE(brackets.size() == 3);

  const auto r1 = solve_symmetric(barrier(), brackets[0], 1e-5, g, Units{});
  CHECK(std::abs(r1.energy.e_real - 0.4601) < 5e-4);
  CHECK(r1.energy.half_width() == doctest::Approx(9.62e-7).epsilon(0.03));
  CHECK(r1.method == Method::symmetric_shooting);

  const auto r2 = solve_symmetric(barrier(), brackets[1], 1e-5, g, Units{});
  CHECK(std::abs(r2.energy.e_real - 1.2804) < 5e-4);
  CHECK(r2.energy.half_width() == doctest::Approx(1.70e-3).epsilon(0.03));

  // Frozen converged values for the broad third state.
  const auto r3 = solve_symmetric(barrier(), brackets[2], 1e-8, g, Units{});
  CHECK(r3.energy.e_real == doctest::Approx(1.877395).epsilon(1e-6));
  CHECK(r3.energy.half_width() == doctest::Approx(7.2439e-2).epsilon(1e-3));
}

TEST_CASE("square well resonance by symmetric shooting") {
  const auto p = make_square_well(-5.0, 3.0);
  const auto r = solve_symmetric(p, {1.65, 1.78}, 1e-5, symmetric_grid(p), Units{});
  CHECK(std::abs(r.energy.e_real - 1.7168141063) < 1e-5);
  CHECK(r.energy.gamma == doctest::Approx(0.983862148563).epsilon(1e-3));
}

TEST_CASE("bisection post-conditions") {
  const auto g = symmetric_grid(barrier());
  const Bracket b{1.27, 1.29};
  const auto r = solve_symmetric(barrier(), b, 1e-6, g, Units{});
  CHECK(r.energy.e_real >= b.e_low);
  CHECK(r.energy.e_real <= b.e_high);
  CHECK(r.energy.gamma > 0.0);
  const double ends = std::min(std::abs(symmetry_criterion(barrier(), b.e_low, g, Units{})),
                               std::abs(symmetry_criterion(barrier(), b.e_high, g, Units{})));
  CHECK(std::abs(r.diagnostics.residual) < ends);
  CHECK(r.trace.xs.front() == -20.0);
  CHECK(r.trace.xs.back() == doctest::Approx(0.0));
}

TEST_CASE("same-sign bracket is rejected") {
  const auto g = symmetric_grid(barrier());
  CHECK(kind_of([&] { solve_symmetric(barrier(), {0.5, 0.6}, 1e-5, g, Units{}); }) == ErrorKind::bracket);
  CHECK(kind_of([&] { solve_symmetric(barrier(), {0.45, 0.47}, 0.0, g, Units{}); }) == ErrorKind::domain);
}

TEST_CASE("grid refinement leaves the resonance unchanged") {
  for (const Bracket b : {Bracket{0.45, 0.47}, Bracket{1.27, 1.29}}) {
    const auto coarse = solve_symmetric(barrier(), b, 1e-10, symmetric_grid(barrier(), 10000), Units{});
    const auto fine = solve_symmetric(barrier(), b, 1e-10, symmetric_grid(barrier(), 20000), Units{});
    CHECK(std::abs(coarse.energy.e_real - fine.energy.e_real) < 1e-6);
  }
}

TEST_CASE("start amplitude does not matter") {
  const auto g = symmetric_grid(barrier());
  const auto a = solve_symmetric(barrier(), {1.27, 1.29}, 1e-5, g, Units{}, 1e-3);
  const auto b = solve_symmetric(barrier(), {1.27, 1.29}, 1e-5, g, Units{}, 1.0);
  CHECK(std::abs(a.energy.e_real - b.energy.e_real) < 1e-5);
  CHECK(a.energy.gamma == doctest::Approx(b.energy.gamma).epsilon(1e-9));
}

TEST_CASE("mirrored trace is even in probability density") {
  const auto g = symmetric_grid(barrier(), 2000);
  const auto r = solve_symmetric(barrier(), {1.27, 1.29}, 1e-6, g, Units{});
  const auto full = mirror_symmetric_trace(r.trace);
  REQUIRE(full.size() == 2 * r.trace.size() - 1);
  CHECK(full.xs.front() == -20.0);
  CHECK(full.xs.back() == 20.0);
  const auto n = full.size();
  for (std::size_t i = 0; i < n; i += 37) {
    CHECK(full.xs[i] == doctest::Approx(-full.xs[n - 1 - i]));
    CHECK(std::norm(full.psi[i]) == doctest::Approx(std::norm(full.psi[n - 1 - i])).epsilon(1e-12));
  }
  for (std::size_t i = 1; i < n; ++i)
    REQUIRE(full.xs[i] > full.xs[i - 1]);
  // Both outflow channels over the full norm give the half-domain width.
  CHECK(siegert_width_asymmetric(full, r.energy.e_real, barrier(), Units{}) ==
        doctest::Approx(r.energy.gamma).epsilon(1e-12));
}

TEST_CASE("one-sided delta shell resonance") {
  const auto p = make_delta_shell(10.0, 1.0);
  const auto g = full_grid(p, 10000);
  const auto r = solve_one_sided(p, 3.5, 5.5, 401, 1e-6, g, Units{});
  CHECK(r.method == Method::one_sided);
  CHECK(r.energy.e_real == doctest::Approx(4.481).epsilon(0.005));
  CHECK(std::abs(r.energy.half_width() - 0.062) < 2e-3);
  CHECK(r.diagnostics.residual < 1e-6);
  // Frozen value of the converged minimum.
  CHECK(r.energy.e_real == doctest::Approx(4.47915).epsilon(1e-5));
}

TEST_CASE("one-sided second delta shell resonance") {
  const auto p = make_delta_shell(10.0, 1.0);
  const auto g = full_grid(p, 10000);
  const auto r = solve_one_sided(p, 15.0, 20.0, 501, 1e-6, g, Units{});
  CHECK(r.energy.e_real == doctest::Approx(17.98).epsilon(0.005));
  CHECK(r.energy.half_width() > 0.062);
}

TEST_CASE("outgoing residual") {
  const auto p = make_delta_shell(10.0, 1.0);
  const auto g = full_grid(p, 10000);
  const auto exact = delta_shell_exact(10.0, 1.0, 1, Units{}, 1e-12);
  CHECK(outgoing_residual(p, exact.e_real, g, Units{}) < 0.05);
  for (double e = 0.5; e < 20.0; e += 0.73) {
    const double r = outgoing_residual(p, e, g, Units{});
    CHECK(r >= 0.0);
    CHECK(r <= 1.0);
  }
}

TEST_CASE("one-sided errors") {
  const auto p = make_delta_shell(10.0, 1.0);
  const auto g = full_grid(p, 2000);
  CHECK(kind_of([&] { solve_one_sided(p, 3.0, 3.1, 50, 1e-6, g, Units{}); }) == ErrorKind::not_found);
  const auto db = make_double_barrier(1.0, 0.1);
  CHECK(kind_of([&] { one_sided_trace(db, 1.0, full_grid(db, 1000), Units{}); }) == ErrorKind::unsupported);
}
