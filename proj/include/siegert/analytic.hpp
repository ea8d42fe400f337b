#ifndef SIEGERT_ANALYTIC_HPP
#define SIEGERT_ANALYTIC_HPP

#include "siegert/core.hpp"

#include <vector>

namespace siegert {

struct AnalyticResonance {
  int n = 0;
  double e_real = 0.0;
  double gamma = 0.0;
  double detuning = 0.0; // delta-shell wavenumber shift; zero for the square well
  bool weak_coupling = false; // delta-shell expansion used outside |k| << lambda
};

/// Transmission resonances of the square well v0 < 0 on |x| <= half_width:
/// E_n = v0 + hbar^2 pi^2 n^2 / (8 m L^2) for every n <= n_max with E_n > 0,
/// and the textbook width
///   Gamma_n = (2 hbar / L) sqrt(2/m) sqrt(E_n) (E_n - v0) / (2 E_n - v0).
std::vector<AnalyticResonance> square_well_resonances(double v0, double half_width, const Units& units, int n_max);

/// Closed-form delta-shell approximation. The detuning
///   delta = (2 lambda L + 1)/(n pi L) - sqrt(((2 lambda L + 1)/(n pi L))^2 + 2/L^2)
/// is the second-order root of k cos(kL) + 2 lambda sin(kL) = 0 about k = n pi/L.
///
/// The half width is the Siegert ratio hbar^2 k |psi(L)|^2 / (2 m int_0^L |psi|^2)
/// for psi = sin(kx), which evaluates to
///   Gamma/2 = 2 hbar^2 k^2 sin^2(delta L) / (m (2 k L - sin(2 delta L))).
/// The often-quoted denominator (n pi + delta L - sin(2 delta L)) drops a
/// factor of two in the kL term and gives Gamma/2 = 0.119 instead of 0.062
/// for lambda = 10, L = 1; the integral form is used here.
AnalyticResonance delta_shell_approx(double lambda, double radius, int n, const Units& units);

struct DeltaShellRoot {
  cplx k;
  ComplexEnergy energy;
  double residual = 0.0;
  int iterations = 0;
};

/// f(k) = k cos(kL) + (2 lambda - i k) sin(kL), the outgoing-wave matching
/// condition of the delta shell.
cplx delta_shell_dispersion(cplx k, double lambda, double radius);
cplx delta_shell_dispersion_derivative(cplx k, double lambda, double radius);

/// Damped Newton iteration in the complex k-plane seeded by the closed-form
/// approximation. Stops once |f(k)| < tol; at most 100 iterations.
DeltaShellRoot delta_shell_exact_root(double lambda, double radius, int n, const Units& units, double tol);

ComplexEnergy delta_shell_exact(double lambda, double radius, int n, const Units& units, double tol);

} // namespace siegert

#endif // SIEGERT_ANALYTIC_HPP
