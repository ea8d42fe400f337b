#include "siegert/shoot.hpp"

#include "siegert/integrate.hpp"
#include "siegert/width.hpp"

#include <algorithm>
#include <cmath>

namespace siegert {

std::string to_string(Method m) {
  switch (m) {
  case Method::symmetric_shooting: return "symmetric-shooting";
  case Method::one_sided: return "one-sided";
  case Method::analytic_square_well: return "analytic-square-well";
  case Method::analytic_delta_shell: return "analytic-delta-shell";
  case Method::exact_delta_shell: return "exact-delta-shell";
  }
  return "unknown";
}

Grid symmetric_grid(const PotentialSpec& p, int n_steps) {
  if (!(p.a_minus < 0.0))
    throw Error(ErrorKind::config, "symmetric shooting needs a_minus < 0");
  return grid_with_deltas(p, p.a_minus, 0.0, n_steps);
}

Grid full_grid(const PotentialSpec& p, int n_steps) {
  return grid_with_deltas(p, p.hard_wall_left.value_or(p.a_minus), p.a_plus, n_steps);
}

int default_scan_points(double e_min, double e_max) {
  return std::max(2, static_cast<int>(std::ceil(default_scan_density * (e_max - e_min))) + 1);
}

namespace {

WavefunctionTrace symmetric_trace(const PotentialSpec& p, double e, const Grid& grid, const Units& units,
                                  double amplitude) {
  const double k = wavenumber(e, units);
  const cplx psi0{amplitude, 0.0};
  return propagate(p, e, grid, {psi0, cplx{0.0, k} * psi0}, units);
}

double criterion_of(const WavefunctionTrace& t) {
  return 2.0 * (std::conj(t.psi.back()) * t.dpsi.back()).real();
}

std::vector<double> lattice(double e_min, double e_max, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = e_min + (e_max - e_min) * i / (n - 1);
  return out;
}

void check_scan(double e_min, double e_max, int n_scan) {
  if (!(e_min > 0.0) || !(e_min < e_max))
    throw Error(ErrorKind::domain, "scan needs 0 < e_min < e_max");
  if (n_scan < 2)
    throw Error(ErrorKind::domain, "scan needs at least two points");
}

} // namespace

double symmetry_criterion(const PotentialSpec& p, double e, const Grid& grid, const Units& units, double amplitude) {
  return criterion_of(symmetric_trace(p, e, grid, units, amplitude));
}

BracketList bracket_scan(const PotentialSpec& p, double e_min, double e_max, int n_scan, const Grid& grid,
                         const Units& units) {
  check_scan(e_min, e_max, n_scan);
  const auto es = lattice(e_min, e_max, n_scan);
  std::vector<double> crit(es.size());
  for (std::size_t i = 0; i < es.size(); ++i)
    crit[i] = symmetry_criterion(p, es[i], grid, units);

  BracketList out;
  for (std::size_t i = 0; i + 1 < es.size(); ++i) {
    if (crit[i] * crit[i + 1] < 0.0) {
      out.push_back({es[i], es[i + 1]});
    } else if (crit[i + 1] == 0.0 && i + 2 < es.size() && crit[i] * crit[i + 2] < 0.0) {
      // Exact zero on a lattice point with a genuine sign change across it.
      out.push_back({es[i], es[i + 2]});
      ++i;
    }
  }
  return out;
}

ResonanceResult solve_symmetric(const PotentialSpec& p, Bracket bracket, double tol_e, const Grid& grid,
                                const Units& units, double amplitude) {
  if (!(tol_e > 0.0))
    throw Error(ErrorKind::domain, "energy tolerance must be positive");
  double lo = bracket.e_low;
  double hi = bracket.e_high;
  double f_lo = symmetry_criterion(p, lo, grid, units, amplitude);
  const double f_hi = symmetry_criterion(p, hi, grid, units, amplitude);

  double e_res = 0.0;
  if (f_lo == 0.0) {
    e_res = lo;
  } else if (f_hi == 0.0) {
    e_res = hi;
  } else {
    if (f_lo * f_hi >= 0.0 || lo >= hi)
      throw Error(ErrorKind::bracket, "criterion has the same sign at both ends of [" + std::to_string(lo) + ", " +
                                          std::to_string(hi) + "]");
    for (int it = 0; it < 200 && hi - lo >= tol_e; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double f_mid = symmetry_criterion(p, mid, grid, units, amplitude);
      if (f_mid * f_lo <= 0.0) {
        hi = mid;
      } else {
        lo = mid;
        f_lo = f_mid;
      }
    }
    e_res = 0.5 * (lo + hi);
  }

  ResonanceResult r;
  r.trace = symmetric_trace(p, e_res, grid, units, amplitude);
  r.energy = {e_res, siegert_width_symmetric(r.trace, e_res, p, units)};
  r.method = Method::symmetric_shooting;
  r.diagnostics = {criterion_of(r.trace), bracket, grid};
  return r;
}

WavefunctionTrace mirror_symmetric_trace(const WavefunctionTrace& half) {
  if (half.empty())
    throw Error(ErrorKind::degenerate, "empty trace");
  const cplx center = half.psi.back();
  const cplx phase = std::abs(center) > 0.0 ? center / std::conj(center) : cplx{1.0, 0.0};
  WavefunctionTrace full = half;
  const auto n = half.size();
  for (std::size_t i = n - 1; i-- > 0;) {
    full.xs.push_back(-half.xs[i]);
    full.psi.push_back(phase * std::conj(half.psi[i]));
    full.dpsi.push_back(-phase * std::conj(half.dpsi[i]));
  }
  return full;
}

WavefunctionTrace one_sided_trace(const PotentialSpec& p, double e, const Grid& grid, const Units& units) {
  if (!p.hard_wall_left)
    throw Error(ErrorKind::unsupported, "one-sided solve needs a hard wall on the left");
  return propagate(p, e, grid, {cplx{0.0, 0.0}, cplx{1.0, 0.0}}, units);
}

namespace {

double residual_of(const WavefunctionTrace& t, double k) {
  const double d2 = std::norm(t.dpsi.back());
  const double p2 = k * k * std::norm(t.psi.back());
  return d2 / (d2 + p2);
}

} // namespace

double outgoing_residual(const PotentialSpec& p, double e, const Grid& grid, const Units& units) {
  return residual_of(one_sided_trace(p, e, grid, units), wavenumber(e, units));
}

std::vector<ResonanceResult> solve_one_sided_all(const PotentialSpec& p, double e_min, double e_max, int n_scan,
                                                 double tol_e, const Grid& grid, const Units& units) {
  check_scan(e_min, e_max, n_scan);
  if (!(tol_e > 0.0))
    throw Error(ErrorKind::domain, "energy tolerance must be positive");
  const auto es = lattice(e_min, e_max, n_scan);
  std::vector<double> res(es.size());
  for (std::size_t i = 0; i < es.size(); ++i)
    res[i] = outgoing_residual(p, es[i], grid, units);

  auto f = [&](double e) { return outgoing_residual(p, e, grid, units); };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  std::vector<ResonanceResult> out;
  for (std::size_t i = 1; i + 1 < es.size(); ++i) {
    if (!(res[i] < res[i - 1] && res[i] <= res[i + 1]))
      continue;
    double a = es[i - 1];
    double b = es[i + 1];
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol_e) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - inv_phi * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + inv_phi * (b - a);
        fd = f(d);
      }
    }
    const double e_res = 0.5 * (a + b);

    ResonanceResult r;
    r.trace = one_sided_trace(p, e_res, grid, units);
    r.energy = {e_res, siegert_width_asymmetric(r.trace, e_res, p, units)};
    r.method = Method::one_sided;
    r.diagnostics = {residual_of(r.trace, wavenumber(e_res, units)), {es[i - 1], es[i + 1]}, grid};
    out.push_back(std::move(r));
  }
  if (out.empty())
    throw Error(ErrorKind::not_found, "no local minimum of the outgoing residual in [" + std::to_string(e_min) +
                                          ", " + std::to_string(e_max) + "]");
  return out;
}

ResonanceResult solve_one_sided(const PotentialSpec& p, double e_min, double e_max, int n_scan, double tol_e,
                                const Grid& grid, const Units& units) {
  auto all = solve_one_sided_all(p, e_min, e_max, n_scan, tol_e, grid, units);
  auto best = std::min_element(all.begin(), all.end(), [](const ResonanceResult& x, const ResonanceResult& y) {
    return x.diagnostics.residual < y.diagnostics.residual;
  });
  return std::move(*best);
}

} // namespace siegert
