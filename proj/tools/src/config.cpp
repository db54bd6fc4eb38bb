#include "cpvortex_cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cpvortex/errors.hpp"
#include "cpvortex_cli/sampling.hpp"

namespace cpv::cli {

namespace {

using json = nlohmann::json;

class FieldError : public ConfigurationError {
 public:
  FieldError(const std::string& pointer, const std::string& what)
      : ConfigurationError(pointer + ": " + what) {}
};

std::string at(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string at(const std::string& base, std::size_t idx) { return base + "/" + std::to_string(idx); }

void allow_keys(const json& obj, const std::string& ptr, const std::set<std::string>& keys) {
  if (!obj.is_object()) throw FieldError(ptr, "expected an object");
  for (const auto& [k, v] : obj.items()) {
    if (!keys.contains(k)) throw FieldError(at(ptr, k), "unknown field");
  }
}

const json& require(const json& obj, const std::string& key, const std::string& ptr) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw FieldError(at(ptr, key), "required field is missing");
  return *it;
}

double as_number(const json& v, const std::string& ptr) {
  if (!v.is_number()) throw FieldError(ptr, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw FieldError(ptr, "expected a finite number");
  return x;
}

long as_integer(const json& v, const std::string& ptr) {
  if (!v.is_number_integer()) throw FieldError(ptr, "expected an integer");
  return v.get<long>();
}

std::string as_string(const json& v, const std::string& ptr) {
  if (!v.is_string()) throw FieldError(ptr, "expected a string");
  return v.get<std::string>();
}

// A complex number is a real number or a [re, im] pair.
Complex as_complex(const json& v, const std::string& ptr) {
  if (v.is_number()) return as_number(v, ptr);
  if (v.is_array() && v.size() == 2) {
    return {as_number(v[0], at(ptr, std::size_t{0})), as_number(v[1], at(ptr, std::size_t{1}))};
  }
  throw FieldError(ptr, "expected a number or a [re, im] pair");
}

Manifold parse_manifold(const json& v, const std::string& ptr) {
  allow_keys(v, ptr, {"kind", "n"});
  const std::string kind = as_string(require(v, "kind", ptr), at(ptr, "kind"));
  if (kind == "plane") {
    if (v.contains("n")) throw FieldError(at(ptr, "n"), "the plane takes no dimension");
    return Manifold::plane();
  }
  if (kind == "cpn") {
    const long n = as_integer(require(v, "n", ptr), at(ptr, "n"));
    if (n < 1 || n > 64) throw FieldError(at(ptr, "n"), "dimension must lie in 1..64");
    return Manifold::cpn(static_cast<int>(n));
  }
  throw FieldError(at(ptr, "kind"), "expected \"plane\" or \"cpn\"");
}

ComplexVector parse_position(const json& v, const Manifold& m, const std::string& ptr) {
  if (m.kind == ManifoldKind::plane) return ComplexVector::Constant(1, as_complex(v, ptr));
  if (!v.is_array() || static_cast<int>(v.size()) != m.n + 1) {
    throw FieldError(ptr, "expected " + std::to_string(m.n + 1) + " homogeneous coordinates");
  }
  ComplexVector out(m.n + 1);
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = as_complex(v[i], at(ptr, i));
  if (out.norm() == 0.0) throw FieldError(ptr, "homogeneous coordinates are all zero");
  return out;
}

void check_pairwise(const Manifold& m, const std::vector<ComplexVector>& pos,
                    const std::string& ptr) {
  for (std::size_t a = 0; a < pos.size(); ++a) {
    for (std::size_t b = a + 1; b < pos.size(); ++b) {
      const double d = m.kind == ManifoldKind::plane
                           ? std::abs(pos[a][0] - pos[b][0])
                           : geodesic_distance_cpn(ProjectivePoint(pos[a]), ProjectivePoint(pos[b]));
      if (d < kCollisionThreshold) {
        throw FieldError(at(at(ptr, b), "position"),
                         "coincides with vortex " + std::to_string(a) + " (distance " +
                             std::to_string(d) + ")");
      }
    }
  }
}

RunConfig parse_document(const json& doc) {
  const std::string root;
  allow_keys(doc, "/", {"manifold", "vortices", "random_vortices", "integrator", "outputs", "seed"});

  std::uint64_t seed = 1;
  if (doc.contains("seed")) {
    const long s = as_integer(doc["seed"], "/seed");
    if (s < 0) throw FieldError("/seed", "seed must be non-negative");
    seed = static_cast<std::uint64_t>(s);
  }

  const Manifold manifold = parse_manifold(require(doc, "manifold", root), "/manifold");

  std::vector<ComplexVector> positions;
  std::vector<double> strengths;
  if (doc.contains("vortices")) {
    const json& list = doc["vortices"];
    if (!list.is_array()) throw FieldError("/vortices", "expected a list");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string ptr = at("/vortices", i);
      allow_keys(list[i], ptr, {"position", "strength"});
      positions.push_back(parse_position(require(list[i], "position", ptr), manifold, at(ptr, "position")));
      const double g = as_number(require(list[i], "strength", ptr), at(ptr, "strength"));
      if (g == 0.0) throw FieldError(at(ptr, "strength"), "strength must be nonzero");
      strengths.push_back(g);
    }
    check_pairwise(manifold, positions, "/vortices");
  }
  if (doc.contains("random_vortices")) {
    const std::string ptr = "/random_vortices";
    const json& r = doc["random_vortices"];
    allow_keys(r, ptr, {"count", "min_separation", "strength_min", "strength_max", "radius"});
    const long count = as_integer(require(r, "count", ptr), at(ptr, "count"));
    if (count < 1 || count > 10000) throw FieldError(at(ptr, "count"), "count must lie in 1..10000");
    const double sep = r.contains("min_separation")
                           ? as_number(r["min_separation"], at(ptr, "min_separation"))
                           : 0.3;
    const double gmin = r.contains("strength_min") ? as_number(r["strength_min"], at(ptr, "strength_min")) : 1.0;
    const double gmax = r.contains("strength_max") ? as_number(r["strength_max"], at(ptr, "strength_max")) : gmin;
    const double radius = r.contains("radius") ? as_number(r["radius"], at(ptr, "radius")) : 1.5;
    if (gmin > gmax) throw FieldError(at(ptr, "strength_max"), "must not be below strength_min");
    if (gmin <= 0.0 && gmax >= 0.0) throw FieldError(ptr, "strength range must exclude zero");
    if (sep < kCollisionThreshold) throw FieldError(at(ptr, "min_separation"), "below the collision threshold");
    if (!(radius > 0.0)) throw FieldError(at(ptr, "radius"), "radius must be positive");
    Rng rng(seed);
    const VortexSystem sampled =
        sample_system(manifold, static_cast<int>(count), sep, gmin, gmax, radius, rng);
    for (int a = 0; a < sampled.size(); ++a) {
      positions.push_back(sampled.position(a));
      strengths.push_back(sampled.strength(a));
    }
    try {
      check_pairwise(manifold, positions, "/vortices");
    } catch (const FieldError&) {
      throw FieldError(ptr, "random vortices coincide with an explicit vortex");
    }
  }
  if (positions.empty()) {
    throw FieldError("/vortices", "at least one vortex is required (vortices or random_vortices)");
  }

  RunConfig cfg{VortexSystem(manifold, positions, strengths)};
  cfg.seed = seed;

  const json& integ = require(doc, "integrator", root);
  const std::string ip = "/integrator";
  allow_keys(integ, ip, {"method", "dt", "steps", "t_end", "atol", "rtol"});
  if (integ.contains("method")) {
    const std::string m = as_string(integ["method"], at(ip, "method"));
    if (m == "rk4") {
      cfg.method = Integrator::rk4;
    } else if (m == "rk45" || m == "rk45_adaptive") {
      cfg.method = Integrator::rk45_adaptive;
    } else {
      throw FieldError(at(ip, "method"), "expected \"rk4\" or \"rk45\"");
    }
  }
  cfg.dt = as_number(require(integ, "dt", ip), at(ip, "dt"));
  if (!(cfg.dt > 0.0)) throw FieldError(at(ip, "dt"), "time step must be positive");
  if (integ.contains("steps") == integ.contains("t_end")) {
    throw FieldError(ip, "exactly one of steps and t_end is required");
  }
  if (integ.contains("steps")) {
    cfg.steps = as_integer(integ["steps"], at(ip, "steps"));
    if (cfg.steps < 0) throw FieldError(at(ip, "steps"), "step count must be non-negative");
  } else {
    const double t_end = as_number(integ["t_end"], at(ip, "t_end"));
    if (t_end < 0.0) throw FieldError(at(ip, "t_end"), "end time must be non-negative");
    cfg.steps = std::lround(t_end / cfg.dt);
  }
  if (cfg.steps > 100000000) throw FieldError(ip, "more than 1e8 steps requested");
  if (integ.contains("atol")) cfg.options.atol = as_number(integ["atol"], at(ip, "atol"));
  if (integ.contains("rtol")) cfg.options.rtol = as_number(integ["rtol"], at(ip, "rtol"));
  if (!(cfg.options.atol > 0.0)) throw FieldError(at(ip, "atol"), "must be positive");
  if (!(cfg.options.rtol > 0.0)) throw FieldError(at(ip, "rtol"), "must be positive");

  if (doc.contains("outputs")) {
    const std::string op = "/outputs";
    const json& out = doc["outputs"];
    allow_keys(out, op, {"trajectory_path", "monitor_path", "summary_path"});
    if (out.contains("trajectory_path")) {
      cfg.trajectory_path = as_string(out["trajectory_path"], at(op, "trajectory_path"));
    }
    if (out.contains("monitor_path")) cfg.monitor_path = as_string(out["monitor_path"], at(op, "monitor_path"));
    if (out.contains("summary_path")) cfg.summary_path = as_string(out["summary_path"], at(op, "summary_path"));
  }
  return cfg;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

RunConfig parse_run_config(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string msg = e.what();
    if (const auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ConfigurationError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                             ": " + msg);
  }
  try {
    return parse_document(doc);
  } catch (const FieldError& e) {
    throw ConfigurationError(source + ": " + e.what());
  } catch (const Error& e) {
    throw ConfigurationError(source + ": invalid configuration: " + e.what());
  }
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigurationError(path + ": cannot open configuration file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str(), path);
}

}  // namespace cpv::cli
