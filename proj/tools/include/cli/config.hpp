#pragma once

#include <stdexcept>
#include <string>

namespace trapps::cli {

// a constraint violation in the input document; the message names the field
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PpsSettings {
  double eps_min = 0.0; // 0 = choose from the parameter magnitudes
  int grid = 64;
  int curves = 8;
};

struct HdSettings {
  int kquad = 0; // 0 = basis size
};

struct CsSettings {
  double rho = 10.0;
  double theta = 0.0;
  int kquad = 0; // 0 = N + 20
  double drho = 1.05;
  double dtheta = 0.05;
  double tol = 2e-3;
};

struct SweepSettings {
  double v1_from = -100.0;
  double v1_to = -40.0;
  int frames = 25;
};

struct RunConfig {
  double lambda = 1.0;
  double u0 = 0.0, u1 = 0.0, u2 = 0.0;
  int ell = 0;
  int N = 50;
  PpsSettings pps;
  HdSettings hd;
  CsSettings cs;
  SweepSettings sweep;
  std::string out = ".";
};

RunConfig load_config_text(const std::string& json_text);
RunConfig load_config_file(const std::string& path);

} // namespace trapps::cli
