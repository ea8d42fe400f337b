#include "siegert/transmission.hpp"

#include "siegert/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace siegert {

ScatteringSolution scattering_solution(const PotentialSpec& p, double e, const Grid& grid, const Units& units,
                                       bool keep_trace) {
  if (!(e > 0.0))
    throw Error(ErrorKind::domain, "scattering needs a positive energy");
  if (p.hard_wall_left)
    throw Error(ErrorKind::unsupported, "no transmission through a hard wall");
  const double k = wavenumber(e, units);
  const cplx ik{0.0, k};
  const cplx psi_end = std::exp(ik * grid.x_end);

  auto trace = propagate(p, e, grid, {psi_end, ik * psi_end}, units, Direction::backward);
  const double x0 = trace.xs.front();
  const cplx psi0 = trace.psi.front();
  const cplx dpsi0 = trace.dpsi.front();

  ScatteringSolution s;
  s.e = e;
  s.amp_in = 0.5 * (psi0 + dpsi0 / ik) * std::exp(-ik * x0);
  s.amp_refl = 0.5 * (psi0 - dpsi0 / ik) * std::exp(ik * x0);
  s.amp_trans = {1.0, 0.0};
  s.t2 = 1.0 / std::norm(s.amp_in);
  s.r2 = std::norm(s.amp_refl) / std::norm(s.amp_in);
  if (keep_trace)
    s.trace = std::move(trace);
  return s;
}

TransmissionCurve transmission_scan(const PotentialSpec& p, double e_min, double e_max, int n_points,
                                    const Grid& grid, const Units& units) {
  if (!(e_min > 0.0) || !(e_min < e_max))
    throw Error(ErrorKind::domain, "transmission scan needs 0 < e_min < e_max");
  if (n_points < 2)
    throw Error(ErrorKind::domain, "transmission scan needs at least two points");
  TransmissionCurve curve;
  curve.samples.reserve(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    const double e = (i == n_points - 1) ? e_max : e_min + (e_max - e_min) * i / (n_points - 1);
    const auto s = scattering_solution(p, e, grid, units, false);
    curve.samples.push_back({e, s.t2, s.r2});
  }
  return curve;
}

std::vector<TransmissionPeak> find_transmission_peaks(const TransmissionCurve& curve) {
  std::vector<TransmissionPeak> out;
  const auto& s = curve.samples;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (!(s[i].t2 > s[i - 1].t2 && s[i].t2 > s[i + 1].t2))
      continue;
    const double x0 = s[i - 1].e, x1 = s[i].e, x2 = s[i + 1].e;
    const double y0 = s[i - 1].t2, y1 = s[i].t2, y2 = s[i + 1].t2;
    // Vertex of the interpolating parabola (Newton divided differences).
    const double d01 = (y1 - y0) / (x1 - x0);
    const double d12 = (y2 - y1) / (x2 - x1);
    const double curv = (d12 - d01) / (x2 - x0);
    double e = x1;
    double t2 = y1;
    if (curv < 0.0) {
      e = 0.5 * (x0 + x1) - d01 / (2.0 * curv);
      e = std::clamp(e, x0, x2);
      t2 = y0 + d01 * (e - x0) + curv * (e - x0) * (e - x1);
    }
    out.push_back({e, t2});
  }
  return out;
}

double breit_wigner_width(const TransmissionCurve& curve, double e_peak) {
  const auto& s = curve.samples;
  if (s.size() < 3)
    throw Error(ErrorKind::range, "curve too short for a width estimate");
  std::size_t idx = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (std::abs(s[i].e - e_peak) < std::abs(s[idx].e - e_peak))
      idx = i;
  const double top = s[idx].t2;
  if (!(top > 0.5))
    throw Error(ErrorKind::range, "peak height " + std::to_string(top) + " is below 1/2");
  const double half = 0.5 * top;

  auto crossing = [&](std::size_t inner, std::size_t outer) {
    const double w = (s[inner].t2 - half) / (s[inner].t2 - s[outer].t2);
    return s[inner].e + w * (s[outer].e - s[inner].e);
  };

  std::size_t left = idx;
  while (left > 0 && s[left - 1].t2 >= half)
    --left;
  if (left == 0)
    throw Error(ErrorKind::range, "left half-maximum crossing lies outside the curve");
  std::size_t right = idx;
  while (right + 1 < s.size() && s[right + 1].t2 >= half)
    ++right;
  if (right + 1 == s.size())
    throw Error(ErrorKind::range, "right half-maximum crossing lies outside the curve");

  return crossing(right, right + 1) - crossing(left, left - 1);
}

TransmissionPeak refine_transmission_peak(const PotentialSpec& p, double e_low, double e_high, double tol_e,
                                          const Grid& grid, const Units& units) {
  if (!(e_low < e_high) || !(tol_e > 0.0))
    throw Error(ErrorKind::domain, "peak refinement needs e_low < e_high and tol_e > 0");
  auto t2 = [&](double e) { return scattering_solution(p, e, grid, units, false).t2; };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = e_low;
  double b = e_high;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = t2(c);
  double fd = t2(d);
  while (b - a > tol_e) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = t2(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = t2(d);
    }
  }
  const double e = 0.5 * (a + b);
  return {e, t2(e)};
}

TransmissionCurve resolve_peak(const PotentialSpec& p, const TransmissionPeak& peak, double e_floor,
                               double e_ceiling, const Grid& grid, const Units& units, int n_points) {
  if (!(e_floor < peak.e_peak && peak.e_peak < e_ceiling))
    throw Error(ErrorKind::domain, "peak must lie strictly inside [e_floor, e_ceiling]");
  auto t2 = [&](double e) { return scattering_solution(p, e, grid, units, false).t2; };
  const double half = 0.5 * peak.t2_peak;

  // Smallest doubling distance at which |T|^2 has dropped below half height.
  auto reach = [&](double sign, double limit) {
    double d = 1e-9 * std::max(1.0, std::abs(peak.e_peak));
    while (true) {
      if (d >= limit)
        return limit;
      if (t2(peak.e_peak + sign * d) < half)
        return d;
      d *= 2.0;
    }
  };
  const double left = reach(-1.0, peak.e_peak - e_floor);
  const double right = reach(1.0, e_ceiling - peak.e_peak);
  const double lo = std::max(e_floor, peak.e_peak - 1.5 * left);
  const double hi = std::min(e_ceiling, peak.e_peak + 1.5 * right);
  return transmission_scan(p, lo, hi, n_points, grid, units);
}

} // namespace siegert
