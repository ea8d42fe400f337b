#include "siegert/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace siegert {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key))
      throw Error(ErrorKind::config, "unknown key '" + key + "' in " + where);
}

const json& require(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key))
    throw Error(ErrorKind::config, "missing key '" + key + "' in " + where);
  return j.at(key);
}

double number_of(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
  for (const char* k : keys)
    if (j.contains(k))
      return j.at(k).get<double>();
  throw Error(ErrorKind::config, std::string("missing key '") + *keys.begin() + "' in " + where);
}

} // namespace

void SolverConfig::validate() const {
  potential.validate();
  units.validate();
  if (grid.n_steps < 100)
    throw Error(ErrorKind::config, "grid.n_steps must be at least 100");
  if (grid.cutoff && !(*grid.cutoff > 0.0))
    throw Error(ErrorKind::config, "grid.cutoff must be positive");
  if (!(tolerances.tol_e > 0.0) || !(tolerances.newton_tol > 0.0))
    throw Error(ErrorKind::config, "tolerances must be positive");
  if (scan.e_min && !(*scan.e_min > 0.0))
    throw Error(ErrorKind::config, "scan.e_min must be positive");
  if (scan.e_min && scan.e_max && !(*scan.e_min < *scan.e_max))
    throw Error(ErrorKind::config, "scan range must satisfy e_min < e_max");
  if (scan.n_scan != 0 && scan.n_scan < 2)
    throw Error(ErrorKind::config, "scan.n_scan must be 0 (auto) or at least 2");
  if (analytic.n_max < 1)
    throw Error(ErrorKind::config, "analytic.n_max must be positive");
  if (analytic.mode != "approx" && analytic.mode != "exact")
    throw Error(ErrorKind::config, "analytic.mode must be 'approx' or 'exact'");
  if (transmission.n_points < 2)
    throw Error(ErrorKind::config, "transmission.n_points must be at least 2");
  if (output.format != "json" && output.format != "csv")
    throw Error(ErrorKind::config, "output.format must be 'json' or 'csv'");
}

PotentialSpec potential_from_json(const json& j) {
  const std::string where = "potential";
  if (!j.is_object())
    throw Error(ErrorKind::config, "potential must be an object");
  const auto type = require(j, "type", where).get<std::string>();
  const std::set<std::string> geometry{"type", "a_minus", "a_plus", "b_minus", "b_plus", "hard_wall_left",
                                       "delta_terms"};
  auto allowed = geometry;

  PotentialSpec p;
  if (type == "square-well") {
    allowed.insert({"v0", "half_width", "L"});
    reject_unknown(j, allowed, where);
    p = make_square_well(number_of(j, {"v0"}, where), number_of(j, {"half_width", "L"}, where));
  } else if (type == "delta-shell") {
    allowed.insert({"lambda", "L", "radius"});
    reject_unknown(j, allowed, where);
    p = make_delta_shell(number_of(j, {"lambda"}, where), number_of(j, {"L", "radius"}, where));
  } else if (type == "double-barrier") {
    allowed.insert({"v0", "lambda", "cutoff"});
    reject_unknown(j, allowed, where);
    p = make_double_barrier(number_of(j, {"v0"}, where), number_of(j, {"lambda"}, where),
                            j.value("cutoff", 20.0));
  } else if (type == "tabulated") {
    allowed.insert({"x", "v", "tail_tol"});
    reject_unknown(j, allowed, where);
    std::optional<double> wall;
    if (j.contains("hard_wall_left") && !j.at("hard_wall_left").is_null())
      wall = j.at("hard_wall_left").get<double>();
    p = make_tabulated(require(j, "x", where).get<std::vector<double>>(),
                       require(j, "v", where).get<std::vector<double>>(), wall, j.value("tail_tol", 1e-12));
  } else {
    throw Error(ErrorKind::config, "unknown potential type '" + type + "'");
  }

  if (j.contains("a_minus")) p.a_minus = j.at("a_minus").get<double>();
  if (j.contains("a_plus")) p.a_plus = j.at("a_plus").get<double>();
  if (j.contains("b_minus")) p.b_minus = j.at("b_minus").get<double>();
  if (j.contains("b_plus")) p.b_plus = j.at("b_plus").get<double>();
  if (j.contains("hard_wall_left")) {
    const auto& w = j.at("hard_wall_left");
    p.hard_wall_left = w.is_null() ? std::nullopt : std::optional<double>(w.get<double>());
  }
  if (j.contains("delta_terms")) {
    p.delta_terms.clear();
    for (const auto& d : j.at("delta_terms")) {
      reject_unknown(d, {"position", "strength"}, "delta_terms entry");
      p.delta_terms.push_back({require(d, "position", "delta_terms entry").get<double>(),
                               require(d, "strength", "delta_terms entry").get<double>()});
    }
  }
  p.validate();
  return p;
}

json potential_to_json(const PotentialSpec& p) {
  json j;
  j["type"] = family_name(p);
  if (const auto* s = std::get_if<SquareWell>(&p.shape)) {
    j["v0"] = s->v0;
    j["half_width"] = s->half_width;
  } else if (const auto* s = std::get_if<DeltaShell>(&p.shape)) {
    j["lambda"] = s->lambda;
    j["L"] = s->radius;
  } else if (const auto* s = std::get_if<DoubleBarrier>(&p.shape)) {
    j["v0"] = s->v0;
    j["lambda"] = s->lambda;
  } else if (const auto* s = std::get_if<Tabulated>(&p.shape)) {
    j["x"] = s->xs;
    j["v"] = s->vs;
  }
  j["a_minus"] = p.a_minus;
  j["a_plus"] = p.a_plus;
  j["b_minus"] = p.b_minus;
  j["b_plus"] = p.b_plus;
  j["hard_wall_left"] = p.hard_wall_left ? json(*p.hard_wall_left) : json(nullptr);
  j["delta_terms"] = json::array();
  for (const auto& d : p.delta_terms)
    j["delta_terms"].push_back({{"position", d.position}, {"strength", d.strength}});
  return j;
}

PotentialSpec parse_potential_shorthand(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorKind::config, "potential shorthand must look like family:p1,p2");
  const auto family = text.substr(0, colon);
  std::vector<double> args;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      args.push_back(std::stod(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::config, "bad number '" + item + "' in potential shorthand");
    }
  }
  if (args.size() != 2)
    throw Error(ErrorKind::config, "potential shorthand takes exactly two parameters");
  if (family == "square-well")
    return make_square_well(args[0], args[1]);
  if (family == "delta-shell")
    return make_delta_shell(args[0], args[1]);
  if (family == "double-barrier")
    return make_double_barrier(args[0], args[1]);
  throw Error(ErrorKind::config, "unknown potential family '" + family + "'");
}

SolverConfig config_from_json(const json& j) {
  try {
    if (!j.is_object())
      throw Error(ErrorKind::config, "config document must be an object");
    reject_unknown(j, {"potential", "units", "grid", "scan", "tolerances", "analytic", "transmission", "output"},
                   "config");
    SolverConfig c;
    c.potential = potential_from_json(require(j, "potential", "config"));
    if (j.contains("units")) {
      const auto& u = j.at("units");
      reject_unknown(u, {"hbar", "mass"}, "units");
      c.units.hbar = u.value("hbar", 1.0);
      c.units.mass = u.value("mass", 1.0);
    }
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      reject_unknown(g, {"cutoff", "n_steps"}, "grid");
      if (g.contains("cutoff") && !g.at("cutoff").is_null())
        c.grid.cutoff = g.at("cutoff").get<double>();
      c.grid.n_steps = g.value("n_steps", c.grid.n_steps);
    }
    if (j.contains("scan")) {
      const auto& s = j.at("scan");
      reject_unknown(s, {"e_min", "e_max", "n_scan"}, "scan");
      if (s.contains("e_min") && !s.at("e_min").is_null())
        c.scan.e_min = s.at("e_min").get<double>();
      if (s.contains("e_max") && !s.at("e_max").is_null())
        c.scan.e_max = s.at("e_max").get<double>();
      c.scan.n_scan = s.value("n_scan", 0);
    }
    if (j.contains("tolerances")) {
      const auto& t = j.at("tolerances");
      reject_unknown(t, {"tol_e", "newton_tol"}, "tolerances");
      c.tolerances.tol_e = t.value("tol_e", c.tolerances.tol_e);
      c.tolerances.newton_tol = t.value("newton_tol", c.tolerances.newton_tol);
    }
    if (j.contains("analytic")) {
      const auto& a = j.at("analytic");
      reject_unknown(a, {"n_max", "mode"}, "analytic");
      c.analytic.n_max = a.value("n_max", c.analytic.n_max);
      c.analytic.mode = a.value("mode", c.analytic.mode);
    }
    if (j.contains("transmission")) {
      const auto& t = j.at("transmission");
      reject_unknown(t, {"n_points"}, "transmission");
      c.transmission.n_points = t.value("n_points", c.transmission.n_points);
    }
    if (j.contains("output")) {
      const auto& o = j.at("output");
      reject_unknown(o, {"format", "path", "trace_path", "header"}, "output");
      c.output.format = o.value("format", c.output.format);
      c.output.path = o.value("path", c.output.path);
      c.output.trace_path = o.value("trace_path", c.output.trace_path);
      c.output.header = o.value("header", c.output.header);
    }
    c.validate();
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::config, e.what());
  }
}

json config_to_json(const SolverConfig& c) {
  json j;
  j["potential"] = potential_to_json(c.potential);
  j["units"] = {{"hbar", c.units.hbar}, {"mass", c.units.mass}};
  j["grid"] = {{"cutoff", c.grid.cutoff ? json(*c.grid.cutoff) : json(nullptr)}, {"n_steps", c.grid.n_steps}};
  j["scan"] = {{"e_min", c.scan.e_min ? json(*c.scan.e_min) : json(nullptr)},
               {"e_max", c.scan.e_max ? json(*c.scan.e_max) : json(nullptr)},
               {"n_scan", c.scan.n_scan}};
  j["tolerances"] = {{"tol_e", c.tolerances.tol_e}, {"newton_tol", c.tolerances.newton_tol}};
  j["analytic"] = {{"n_max", c.analytic.n_max}, {"mode", c.analytic.mode}};
  j["transmission"] = {{"n_points", c.transmission.n_points}};
  j["output"] = {{"format", c.output.format},
                 {"path", c.output.path},
                 {"trace_path", c.output.trace_path},
                 {"header", c.output.header}};
  return j;
}

SolverConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::config, "cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::config, "cannot parse '" + path + "': " + e.what());
  }
  return config_from_json(j);
}

PotentialSpec apply_cutoff(PotentialSpec p, const GridConfig& grid) {
  if (!grid.cutoff)
    return p;
  const double a = *grid.cutoff;
  if (p.hard_wall_left) {
    p.a_plus = a;
  } else {
    p.a_minus = -a;
    p.a_plus = a;
  }
  p.validate();
  return p;
}

} // namespace siegert
