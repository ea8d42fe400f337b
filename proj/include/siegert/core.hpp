#ifndef SIEGERT_CORE_HPP
#define SIEGERT_CORE_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace siegert {

using cplx = std::complex<double>;

/// Failure categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
  domain,        // argument outside the mathematical domain of an operation
  wall,          // position lies inside a hard-wall region
  range,         // position or energy outside tabulated / resolvable range
  structure,     // potential lacks the confining structure an operation needs
  config,        // inconsistent grid or configuration
  overflow,      // non-finite values during propagation
  bracket,       // bisection bracket without a sign change
  not_found,     // no resonance in the requested window
  degenerate,    // trace with vanishing norm
  convergence,   // iterative solver did not converge
  spurious_root, // root on the unphysical sheet
  unsupported    // operation not available for this input
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Scale of the action quantum and particle mass. hbar = mass = 1 gives
/// the scaled units used throughout the examples.
struct Units {
  double hbar = 1.0;
  double mass = 1.0;

  void validate() const;
  bool operator==(const Units&) const = default;
};

/// Complex resonance energy E - i*gamma/2.
struct ComplexEnergy {
  double e_real = 0.0;
  double gamma = 0.0;

  cplx value() const { return {e_real, -0.5 * gamma}; }
  double half_width() const { return 0.5 * gamma; }
};

/// Uniform grid of n_steps RK4 steps between x_start and x_end.
struct Grid {
  double x_start = 0.0;
  double x_end = 1.0;
  int n_steps = 1;

  Grid() = default;
  Grid(double start, double end, int steps);

  double dx() const { return (x_end - x_start) / n_steps; }
  double node(int i) const { return x_start + i * dx(); }
  bool operator==(const Grid&) const = default;
};

/// Sampled wavefunction and derivative; xs is strictly increasing.
struct WavefunctionTrace {
  std::vector<double> xs;
  std::vector<cplx> psi;
  std::vector<cplx> dpsi;

  std::size_t size() const { return xs.size(); }
  bool empty() const { return xs.empty(); }
  /// Index of the grid node closest to x (clamped to the trace).
  std::size_t nearest_index(double x) const;
  void scale(cplx factor);
};

/// k = sqrt(2 m e) / hbar for e > 0.
double wavenumber(double e, const Units& units);

/// Principal-branch k = sqrt(2 m (E - i gamma/2)) / hbar, Re k > 0.
cplx complex_wavenumber(const ComplexEnergy& energy, const Units& units);

} // namespace siegert

#endif // SIEGERT_CORE_HPP
