#include "siegert/potentials.hpp"

#include "siegert/core.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>

namespace siegert {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

double double_barrier_value(const DoubleBarrier& s, double x) {
  return 0.5 * s.v0 * x * x * std::exp(-s.lambda * x * x);
}

double interpolate(const Tabulated& t, double x) {
  if (x < t.xs.front() || x > t.xs.back())
    throw Error(ErrorKind::range, "position " + std::to_string(x) + " outside tabulated range");
  auto it = std::upper_bound(t.xs.begin(), t.xs.end(), x);
  if (it == t.xs.end())
    return t.vs.back();
  const auto hi = static_cast<std::size_t>(it - t.xs.begin());
  const auto lo = hi - 1;
  const double w = (x - t.xs[lo]) / (t.xs[hi] - t.xs[lo]);
  return (1.0 - w) * t.vs[lo] + w * t.vs[hi];
}

std::vector<std::size_t> interior_maxima(const Tabulated& t) {
  std::vector<std::size_t> out;
  const auto n = t.vs.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(t.vs[i] > t.vs[i - 1]))
      continue;
    // Walk across a flat top; it is a maximum only if the far side drops.
    std::size_t j = i;
    while (j + 1 < n && t.vs[j + 1] == t.vs[i])
      ++j;
    if (j + 1 < n && t.vs[j + 1] < t.vs[i])
      out.push_back(i);
  }
  return out;
}

void check_tabulated(const Tabulated& t) {
  if (t.xs.size() < 2 || t.xs.size() != t.vs.size())
    throw Error(ErrorKind::config, "tabulated potential needs at least two (x, V) pairs");
  for (std::size_t i = 1; i < t.xs.size(); ++i)
    if (!(t.xs[i] > t.xs[i - 1]))
      throw Error(ErrorKind::config, "tabulated positions must be strictly increasing");
  for (double v : t.vs)
    if (!std::isfinite(v))
      throw Error(ErrorKind::config, "tabulated values must be finite");
}

} // namespace

void PotentialSpec::validate() const {
  std::visit(overloaded{
                 [](const SquareWell& s) {
                   if (!(s.v0 < 0.0) || !(s.half_width > 0.0))
                     throw Error(ErrorKind::config, "square well needs v0 < 0 and half_width > 0");
                 },
                 [](const DeltaShell& s) {
                   if (!(s.lambda > 0.0) || !(s.radius > 0.0))
                     throw Error(ErrorKind::config, "delta shell needs lambda > 0 and L > 0");
                 },
                 [](const DoubleBarrier& s) {
                   if (!(s.v0 > 0.0) || !(s.lambda > 0.0))
                     throw Error(ErrorKind::config, "double barrier needs v0 > 0 and lambda > 0");
                 },
                 [](const Tabulated& t) { check_tabulated(t); },
             },
             shape);
  if (!(a_minus <= b_minus && b_minus < b_plus && b_plus <= a_plus))
    throw Error(ErrorKind::config, "need a_minus <= b_minus < b_plus <= a_plus");
  if (hard_wall_left && *hard_wall_left > a_minus)
    throw Error(ErrorKind::config, "hard wall must not lie inside the cutoff range");
  for (const auto& d : delta_terms)
    if (!std::isfinite(d.position) || !std::isfinite(d.strength))
      throw Error(ErrorKind::config, "delta terms must be finite");
}

PotentialSpec make_square_well(double v0, double half_width) {
  PotentialSpec p;
  p.shape = SquareWell{v0, half_width};
  p.a_minus = p.b_minus = -half_width;
  p.a_plus = p.b_plus = half_width;
  p.validate();
  return p;
}

PotentialSpec make_delta_shell(double lambda, double radius) {
  PotentialSpec p;
  p.shape = DeltaShell{lambda, radius};
  p.delta_terms.push_back({radius, lambda});
  p.hard_wall_left = 0.0;
  p.a_minus = p.b_minus = 0.0;
  p.a_plus = p.b_plus = radius;
  p.validate();
  return p;
}

PotentialSpec make_double_barrier(double v0, double lambda, double cutoff) {
  PotentialSpec p;
  p.shape = DoubleBarrier{v0, lambda};
  if (!(lambda > 0.0))
    throw Error(ErrorKind::config, "double barrier needs lambda > 0");
  const double b = 1.0 / std::sqrt(lambda);
  p.a_minus = -cutoff;
  p.a_plus = cutoff;
  p.b_minus = -b;
  p.b_plus = b;
  p.validate();
  return p;
}

PotentialSpec make_tabulated(std::vector<double> xs, std::vector<double> vs,
                             std::optional<double> hard_wall_left, double tail_tol) {
  PotentialSpec p;
  Tabulated t{std::move(xs), std::move(vs)};
  check_tabulated(t);
  p.shape = std::move(t);
  p.hard_wall_left = hard_wall_left;
  const auto& tab = std::get<Tabulated>(p.shape);
  if (hard_wall_left && (*hard_wall_left < tab.xs.front() || *hard_wall_left >= tab.xs.back()))
    throw Error(ErrorKind::config, "hard wall must lie inside the tabulated range");

  auto [a_lo, a_hi] = effective_range(p, tail_tol);
  if (hard_wall_left)
    a_lo = *hard_wall_left;
  p.a_minus = a_lo;
  p.a_plus = a_hi;
  try {
    auto [b_lo, b_hi] = barrier_maxima(p);
    p.b_minus = b_lo;
    p.b_plus = b_hi;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::structure)
      throw;
    p.b_minus = p.a_minus;
    p.b_plus = p.a_plus;
  }
  if (!(p.a_minus < p.a_plus)) {
    // Entirely below the tail tolerance: keep the whole table as the range.
    p.a_minus = p.b_minus = hard_wall_left.value_or(tab.xs.front());
    p.a_plus = p.b_plus = tab.xs.back();
  }
  p.validate();
  return p;
}

std::string family_name(const PotentialSpec& p) {
  return std::visit(overloaded{
                        [](const SquareWell&) { return std::string("square-well"); },
                        [](const DeltaShell&) { return std::string("delta-shell"); },
                        [](const DoubleBarrier&) { return std::string("double-barrier"); },
                        [](const Tabulated&) { return std::string("tabulated"); },
                    },
                    p.shape);
}

bool in_wall_region(const PotentialSpec& p, double x) {
  return p.hard_wall_left && x < *p.hard_wall_left;
}

double evaluate(const PotentialSpec& p, double x) {
  if (in_wall_region(p, x))
    throw Error(ErrorKind::wall, "position " + std::to_string(x) + " is behind the hard wall");
  return std::visit(overloaded{
                        [x](const SquareWell& s) { return std::abs(x) <= s.half_width ? s.v0 : 0.0; },
                        [](const DeltaShell&) { return 0.0; },
                        [x](const DoubleBarrier& s) { return double_barrier_value(s, x); },
                        [x](const Tabulated& t) { return interpolate(t, x); },
                    },
                    p.shape);
}

std::pair<double, double> barrier_maxima(const PotentialSpec& p) {
  return std::visit(
      overloaded{
          [](const SquareWell& s) { return std::pair{-s.half_width, s.half_width}; },
          [](const DeltaShell& s) { return std::pair{0.0, s.radius}; },
          [](const DoubleBarrier& s) {
            const double b = 1.0 / std::sqrt(s.lambda);
            return std::pair{-b, b};
          },
          [&p](const Tabulated& t) {
            const auto maxima = interior_maxima(t);
            if (p.hard_wall_left) {
              for (auto it = maxima.rbegin(); it != maxima.rend(); ++it)
                if (t.xs[*it] > *p.hard_wall_left)
                  return std::pair{*p.hard_wall_left, t.xs[*it]};
              throw Error(ErrorKind::structure, "no barrier maximum right of the wall");
            }
            if (maxima.size() < 2)
              throw Error(ErrorKind::structure, "tabulated potential needs a barrier maximum on each side");
            return std::pair{t.xs[maxima.front()], t.xs[maxima.back()]};
          },
      },
      p.shape);
}

std::pair<double, double> effective_range(const PotentialSpec& p, double tail_tol) {
  if (!(tail_tol > 0.0))
    throw Error(ErrorKind::domain, "tail tolerance must be positive");
  return std::visit(
      overloaded{
          [](const SquareWell& s) { return std::pair{-s.half_width, s.half_width}; },
          [](const DeltaShell& s) { return std::pair{0.0, s.radius}; },
          [tail_tol](const DoubleBarrier& s) {
            // Beyond the maximum at b the tail decreases monotonically.
            const double b = 1.0 / std::sqrt(s.lambda);
            if (std::abs(double_barrier_value(s, b)) <= tail_tol)
              return std::pair{-b, b};
            double lo = b;
            double hi = 2.0 * b;
            while (std::abs(double_barrier_value(s, hi)) >= tail_tol) {
              lo = hi;
              hi *= 2.0;
            }
            for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
              const double mid = 0.5 * (lo + hi);
              (std::abs(double_barrier_value(s, mid)) >= tail_tol ? lo : hi) = mid;
            }
            return std::pair{-hi, hi};
          },
          [tail_tol](const Tabulated& t) {
            const auto n = t.vs.size();
            if (std::abs(t.vs.front()) >= tail_tol || std::abs(t.vs.back()) >= tail_tol)
              throw Error(ErrorKind::range, "tabulated potential does not decay below the tail tolerance at its ends");
            std::size_t first = n;
            std::size_t last = 0;
            for (std::size_t i = 0; i < n; ++i) {
              if (std::abs(t.vs[i]) >= tail_tol) {
                first = std::min(first, i);
                last = i;
              }
            }
            if (first == n)
              return std::pair{t.xs.front(), t.xs.back()};
            // The last sample below tolerance bounds the support on each side.
            return std::pair{t.xs[first - 1], t.xs[last + 1]};
          },
      },
      p.shape);
}

bool is_symmetric(const PotentialSpec& p) {
  if (p.hard_wall_left)
    return false;
  const double scale = std::max(std::abs(p.a_minus), std::abs(p.a_plus));
  const double tol = 1e-12 * std::max(1.0, scale);
  if (std::abs(p.a_minus + p.a_plus) > tol || std::abs(p.b_minus + p.b_plus) > tol)
    return false;
  for (const auto& d : p.delta_terms) {
    const bool mirrored = std::any_of(p.delta_terms.begin(), p.delta_terms.end(), [&](const DeltaTerm& o) {
      return std::abs(o.position + d.position) <= tol && o.strength == d.strength;
    });
    if (!mirrored)
      return false;
  }
  if (const auto* t = std::get_if<Tabulated>(&p.shape)) {
    const auto n = t->xs.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = n - 1 - i;
      if (std::abs(t->xs[i] + t->xs[j]) > tol)
        return false;
      if (std::abs(t->vs[i] - t->vs[j]) > 1e-12 * std::max(1.0, std::abs(t->vs[i])))
        return false;
    }
    return true;
  }
  return !std::holds_alternative<DeltaShell>(p.shape);
}

} // namespace siegert
