#include "siegert/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace siegert {

std::vector<AnalyticResonance> square_well_resonances(double v0, double half_width, const Units& units, int n_max) {
  if (!(v0 < 0.0) || !(half_width > 0.0))
    throw Error(ErrorKind::domain, "square well needs v0 < 0 and half_width > 0");
  units.validate();
  const double pi = std::numbers::pi;
  const double level = units.hbar * units.hbar * pi * pi / (8.0 * units.mass * half_width * half_width);
  std::vector<AnalyticResonance> out;
  for (int n = 1; n <= n_max; ++n) {
    const double e = v0 + level * n * n;
    if (!(e > 0.0))
      continue;
    const double gamma = 2.0 * units.hbar / half_width * std::sqrt(2.0 / units.mass) * std::sqrt(e) * (e - v0) /
                         (2.0 * e - v0);
    out.push_back({n, e, gamma, 0.0, false});
  }
  return out;
}

AnalyticResonance delta_shell_approx(double lambda, double radius, int n, const Units& units) {
  if (n <= 0)
    throw Error(ErrorKind::domain, "quantum number must be positive");
  if (!(lambda > 0.0) || !(radius > 0.0))
    throw Error(ErrorKind::domain, "delta shell needs lambda > 0 and L > 0");
  const double L = radius;
  const double npi = n * std::numbers::pi;
  const double c = (2.0 * lambda * L + 1.0) / (npi * L);
  // c - sqrt(c^2 + 2/L^2) rewritten to avoid cancellation for large lambda.
  const double delta = -(2.0 / (L * L)) / (c + std::sqrt(c * c + 2.0 / (L * L)));
  const double k = npi / L + delta;
  const double hb2m = units.hbar * units.hbar / units.mass;
  const double s = std::sin(delta * L);
  const double half_gamma = 2.0 * hb2m * k * k * s * s / (2.0 * k * L - std::sin(2.0 * delta * L));

  AnalyticResonance r;
  r.n = n;
  r.e_real = 0.5 * hb2m * k * k;
  r.gamma = 2.0 * half_gamma;
  r.detuning = delta;
  r.weak_coupling = !(npi / L < lambda);
  return r;
}

cplx delta_shell_dispersion(cplx k, double lambda, double radius) {
  const cplx i{0.0, 1.0};
  return k * std::cos(k * radius) + (2.0 * lambda - i * k) * std::sin(k * radius);
}

cplx delta_shell_dispersion_derivative(cplx k, double lambda, double radius) {
  const cplx i{0.0, 1.0};
  const double L = radius;
  const cplx c = std::cos(k * L);
  const cplx s = std::sin(k * L);
  return c - k * L * s - i * s + (2.0 * lambda - i * k) * L * c;
}

DeltaShellRoot delta_shell_exact_root(double lambda, double radius, int n, const Units& units, double tol) {
  if (!(tol > 0.0))
    throw Error(ErrorKind::domain, "Newton tolerance must be positive");
  const auto seed = delta_shell_approx(lambda, radius, n, units);
  cplx k = n * std::numbers::pi / radius + seed.detuning;
  cplx f = delta_shell_dispersion(k, lambda, radius);

  constexpr int max_iterations = 100;
  int it = 0;
  while (std::abs(f) >= tol) {
    if (++it > max_iterations)
      throw Error(ErrorKind::convergence, "delta-shell Newton iteration did not converge (|f| = " +
                                              std::to_string(std::abs(f)) + ")");
    const cplx df = delta_shell_dispersion_derivative(k, lambda, radius);
    if (df == cplx{})
      throw Error(ErrorKind::convergence, "vanishing derivative in Newton iteration");
    cplx step = f / df;
    cplx k_new = k - step;
    cplx f_new = delta_shell_dispersion(k_new, lambda, radius);
    for (int halving = 0; halving < 30 && std::abs(f_new) > std::abs(f); ++halving) {
      step *= 0.5;
      k_new = k - step;
      f_new = delta_shell_dispersion(k_new, lambda, radius);
    }
    k = k_new;
    f = f_new;
  }

  const cplx energy = units.hbar * units.hbar * k * k / (2.0 * units.mass);
  if (energy.imag() > 0.0)
    throw Error(ErrorKind::spurious_root, "Newton iteration converged to a root with Im E > 0");
  return {k, {energy.real(), -2.0 * energy.imag()}, std::abs(f), it};
}

ComplexEnergy delta_shell_exact(double lambda, double radius, int n, const Units& units, double tol) {
  return delta_shell_exact_root(lambda, radius, n, units, tol).energy;
}

} // namespace siegert
