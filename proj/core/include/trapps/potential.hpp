#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "trapps/eigen_kernels.hpp"

namespace trapps {

// V(r) = (V0 + V1 tanh^2(lr) + V2 tanh^4(lr)) / sinh^2(lr); u_i = V_i / l^2.
struct PotentialParams {
  double lambda = 1.0;
  double v0 = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;

  double u0() const { return v0 / (lambda * lambda); }
  double u1() const { return v1 / (lambda * lambda); }
  double u2() const { return v2 / (lambda * lambda); }
};

PotentialParams params_from_u(double lambda, double u0, double u1, double u2);

// shape classes of V on (0,inf), by the critical points of the rational form in
// t = tanh^2(lr)
enum class ConfigKind {
  ResonancesOnly,     // barrier with a positive pocket
  BoundAndResonances, // negative pocket behind a barrier
  Inflection,         // degenerate (double) critical point
  Monotone,           // no interior critical point
  BoundOnly,          // single minimum
};

std::string to_string(ConfigKind kind);
char config_class_letter(ConfigKind kind);

struct ConfigClass {
  ConfigKind kind = ConfigKind::Monotone;
  // (t, V(t)) at each interior critical point, t ascending
  std::vector<std::pair<double, double>> critical_points;
};

// full potential at complex radius (complex plane is what the rotated-contour
// solver samples)
Cplx eval_potential(const PotentialParams& p, Cplx r);

// V expressed through t = tanh^2(lr): V = l^2 (1-t)(u0 + u1 t + u2 t^2)/t
double eval_potential_t(const PotentialParams& p, double t);

// V(r) - u0/r^2: the singular part removed, finite at the origin
Cplx eval_regularized(const PotentialParams& p, Cplx r);

// (c_sing, c0, c2) with V ~ c_sing/r^2 + c0 + c2 (lr)^2 near r = 0
std::array<double, 3> near_origin_coeffs(const PotentialParams& p);

// effective angular momentum absorbing the 1/r^2 strength:
// lt(lt+1) = l(l+1) + 2 u0, lt = -1/2 + sqrt((l+1/2)^2 + 2 u0)
double effective_ell(double u0, int ell);

ConfigClass classify_configuration(const PotentialParams& p);

} // namespace trapps
