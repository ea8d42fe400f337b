#ifndef SIEGERT_POTENTIALS_HPP
#define SIEGERT_POTENTIALS_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace siegert {

/// V(x) = v0 for |x| <= half_width, zero outside. v0 < 0.
struct SquareWell {
  double v0 = -5.0;
  double half_width = 3.0;
  bool operator==(const SquareWell&) const = default;
};

/// Hard wall at x = 0 and (hbar^2/m) lambda delta(x - radius).
struct DeltaShell {
  double lambda = 10.0;
  double radius = 1.0;
  bool operator==(const DeltaShell&) const = default;
};

/// V(x) = (v0/2) x^2 exp(-lambda x^2).
struct DoubleBarrier {
  double v0 = 1.0;
  double lambda = 0.1;
  bool operator==(const DoubleBarrier&) const = default;
};

/// Linearly interpolated samples (xs strictly increasing).
struct Tabulated {
  std::vector<double> xs;
  std::vector<double> vs;
  bool operator==(const Tabulated&) const = default;
};

using PotentialShape = std::variant<SquareWell, DeltaShell, DoubleBarrier, Tabulated>;

/// Point interaction (hbar^2/m) strength delta(x - position). Crossing it
/// left to right adds 2 * strength * psi to psi'.
struct DeltaTerm {
  double position = 0.0;
  double strength = 0.0;
  bool operator==(const DeltaTerm&) const = default;
};

/// Finite-range 1D potential together with its cutoff points a_minus/a_plus
/// (V is treated as zero beyond them) and confinement points b_minus/b_plus
/// (barrier maxima or walls bounding the trap).
struct PotentialSpec {
  PotentialShape shape;
  std::vector<DeltaTerm> delta_terms;
  std::optional<double> hard_wall_left;
  double a_minus = 0.0;
  double a_plus = 0.0;
  double b_minus = 0.0;
  double b_plus = 0.0;

  bool operator==(const PotentialSpec&) const = default;

  /// Throws Error(config) when the ordering a- <= b- < b+ <= a+ is violated
  /// or the shape parameters are out of range.
  void validate() const;
};

PotentialSpec make_square_well(double v0, double half_width);
PotentialSpec make_delta_shell(double lambda, double radius);
PotentialSpec make_double_barrier(double v0, double lambda, double cutoff = 20.0);

/// Cutoffs come from effective_range(tail_tol) and confinement points from
/// barrier_maxima when the table has them, otherwise from the cutoffs. With a
/// hard wall the left cutoff and confinement point are both the wall.
PotentialSpec make_tabulated(std::vector<double> xs, std::vector<double> vs,
                             std::optional<double> hard_wall_left = std::nullopt,
                             double tail_tol = 1e-12);

/// Short family tag: "square-well", "delta-shell", "double-barrier", "tabulated".
std::string family_name(const PotentialSpec& p);

bool in_wall_region(const PotentialSpec& p, double x);

/// Smooth part of the potential. Delta terms are not included. Throws
/// Error(wall) inside the hard wall and Error(range) outside a table.
double evaluate(const PotentialSpec& p, double x);

/// Positions of the barrier maxima confining the trap.
std::pair<double, double> barrier_maxima(const PotentialSpec& p);

/// Extent beyond which |V| stays below tail_tol.
std::pair<double, double> effective_range(const PotentialSpec& p, double tail_tol);

/// V(-x) == V(x) with mirrored delta terms and no hard wall.
bool is_symmetric(const PotentialSpec& p);

} // namespace siegert

#endif // SIEGERT_POTENTIALS_HPP
