#include "cli/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace trapps::cli {

namespace {

using nlohmann::json;

double need_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path + ": expected a number");
  return j.get<double>();
}

int need_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path + ": expected an integer");
  return j.get<int>();
}

std::string need_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path + ": expected a string");
  return j.get<std::string>();
}

RunConfig from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config root: expected an object");
  RunConfig cfg;

  if (doc.contains("lambda")) {
    cfg.lambda = need_number(doc["lambda"], "lambda");
    if (!(cfg.lambda > 0.0)) throw ConfigError("lambda: must be > 0");
  }

  if (!doc.contains("u")) throw ConfigError("u: required field [u0, u1, u2] is missing");
  const json& u = doc["u"];
  if (!u.is_array() || u.size() != 3)
    throw ConfigError("u: expected an array of three numbers");
  cfg.u0 = need_number(u[0], "u[0]");
  cfg.u1 = need_number(u[1], "u[1]");
  cfg.u2 = need_number(u[2], "u[2]");
  if (!(cfg.u0 > -0.125)) throw ConfigError("u[0]: must be > -1/8");

  if (doc.contains("ell")) {
    cfg.ell = need_int(doc["ell"], "ell");
    if (cfg.ell < 0) throw ConfigError("ell: must be >= 0");
  }
  if (doc.contains("N")) {
    cfg.N = need_int(doc["N"], "N");
    if (cfg.N < 1) throw ConfigError("N: must be >= 1");
  }

  if (doc.contains("pps")) {
    const json& p = doc["pps"];
    if (!p.is_object()) throw ConfigError("pps: expected an object");
    if (p.contains("eps_min")) {
      cfg.pps.eps_min = need_number(p["eps_min"], "pps.eps_min");
      if (!(cfg.pps.eps_min < 0.0)) throw ConfigError("pps.eps_min: must be < 0");
    }
    if (p.contains("grid")) {
      cfg.pps.grid = need_int(p["grid"], "pps.grid");
      if (cfg.pps.grid < 4) throw ConfigError("pps.grid: must be >= 4");
    }
    if (p.contains("curves")) {
      cfg.pps.curves = need_int(p["curves"], "pps.curves");
      if (cfg.pps.curves < 1) throw ConfigError("pps.curves: must be >= 1");
    }
  }

  if (doc.contains("hd")) {
    const json& h = doc["hd"];
    if (!h.is_object()) throw ConfigError("hd: expected an object");
    if (h.contains("kquad")) {
      cfg.hd.kquad = need_int(h["kquad"], "hd.kquad");
      if (cfg.hd.kquad < 0) throw ConfigError("hd.kquad: must be >= 0 (0 = auto)");
    }
  }

  if (doc.contains("cs")) {
    const json& c = doc["cs"];
    if (!c.is_object()) throw ConfigError("cs: expected an object");
    if (c.contains("rho")) {
      cfg.cs.rho = need_number(c["rho"], "cs.rho");
      if (!(cfg.cs.rho > 0.0)) throw ConfigError("cs.rho: must be > 0");
    }
    if (c.contains("theta")) {
      cfg.cs.theta = need_number(c["theta"], "cs.theta");
      if (!(cfg.cs.theta >= 0.0 && cfg.cs.theta < M_PI / 2))
        throw ConfigError("cs.theta: must lie in [0, pi/2)");
    }
    if (c.contains("kquad")) {
      cfg.cs.kquad = need_int(c["kquad"], "cs.kquad");
      if (cfg.cs.kquad < 0) throw ConfigError("cs.kquad: must be >= 0 (0 = auto)");
    }
    if (c.contains("drho")) {
      cfg.cs.drho = need_number(c["drho"], "cs.drho");
      if (!(cfg.cs.drho > 0.0) || cfg.cs.drho == 1.0)
        throw ConfigError("cs.drho: must be positive and different from 1");
    }
    if (c.contains("dtheta")) {
      cfg.cs.dtheta = need_number(c["dtheta"], "cs.dtheta");
      if (cfg.cs.dtheta == 0.0) throw ConfigError("cs.dtheta: must be nonzero");
    }
    if (c.contains("tol")) {
      cfg.cs.tol = need_number(c["tol"], "cs.tol");
      if (!(cfg.cs.tol > 0.0)) throw ConfigError("cs.tol: must be > 0");
    }
  }

  if (doc.contains("sweep")) {
    const json& s = doc["sweep"];
    if (!s.is_object()) throw ConfigError("sweep: expected an object");
    if (s.contains("v1_from")) cfg.sweep.v1_from = need_number(s["v1_from"], "sweep.v1_from");
    if (s.contains("v1_to")) cfg.sweep.v1_to = need_number(s["v1_to"], "sweep.v1_to");
    if (s.contains("frames")) {
      cfg.sweep.frames = need_int(s["frames"], "sweep.frames");
      if (cfg.sweep.frames < 1) throw ConfigError("sweep.frames: must be >= 1");
    }
  }

  if (doc.contains("out")) cfg.out = need_string(doc["out"], "out");
  return cfg;
}

} // namespace

RunConfig load_config_text(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& ex) {
    throw ConfigError(std::string("config parse error: ") + ex.what());
  }
  return from_json(doc);
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config file not readable: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_config_text(buf.str());
}

} // namespace trapps::cli
