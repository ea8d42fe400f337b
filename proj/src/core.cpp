#include "siegert/core.hpp"

#include <algorithm>
#include <cmath>

namespace siegert {

const char* to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::domain: return "domain error";
  case ErrorKind::wall: return "hard-wall region";
  case ErrorKind::range: return "range error";
  case ErrorKind::structure: return "structure error";
  case ErrorKind::config: return "configuration error";
  case ErrorKind::overflow: return "overflow error";
  case ErrorKind::bracket: return "bracket error";
  case ErrorKind::not_found: return "not found";
  case ErrorKind::degenerate: return "degenerate trace";
  case ErrorKind::convergence: return "convergence error";
  case ErrorKind::spurious_root: return "spurious root";
  case ErrorKind::unsupported: return "unsupported";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void Units::validate() const {
  if (!(hbar > 0.0) || !(mass > 0.0))
    throw Error(ErrorKind::config, "hbar and mass must be positive");
}

Grid::Grid(double start, double end, int steps) : x_start(start), x_end(end), n_steps(steps) {
  if (!(start < end))
    throw Error(ErrorKind::config, "grid requires x_start < x_end");
  if (steps < 1)
    throw Error(ErrorKind::config, "grid requires at least one step");
}

std::size_t WavefunctionTrace::nearest_index(double x) const {
  if (xs.empty())
    throw Error(ErrorKind::degenerate, "empty trace");
  auto it = std::lower_bound(xs.begin(), xs.end(), x);
  if (it == xs.begin())
    return 0;
  if (it == xs.end())
    return xs.size() - 1;
  const auto hi = static_cast<std::size_t>(it - xs.begin());
  return (x - xs[hi - 1] <= xs[hi] - x) ? hi - 1 : hi;
}

void WavefunctionTrace::scale(cplx factor) {
  for (auto& v : psi)
    v *= factor;
  for (auto& v : dpsi)
    v *= factor;
}

double wavenumber(double e, const Units& units) {
  if (!(e > 0.0))
    throw Error(ErrorKind::domain, "wavenumber needs a positive energy");
  return std::sqrt(2.0 * units.mass * e) / units.hbar;
}

cplx complex_wavenumber(const ComplexEnergy& energy, const Units& units) {
  if (!(energy.e_real > 0.0) && !(energy.gamma > 0.0))
    throw Error(ErrorKind::domain, "complex wavenumber needs e_real > 0 or gamma > 0");
  // std::sqrt is the principal branch: Re k >= 0, and Im k < 0 for Im E < 0.
  return std::sqrt(2.0 * units.mass * energy.value()) / units.hbar;
}

} // namespace siegert
