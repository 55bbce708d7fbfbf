#include "trapps/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trapps {

PotentialParams params_from_u(double lambda, double u0, double u1, double u2) {
  if (!(lambda > 0.0)) throw std::domain_error("lambda must be positive");
  const double l2 = lambda * lambda;
  return {lambda, u0 * l2, u1 * l2, u2 * l2};
}

std::string to_string(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::ResonancesOnly: return "ResonancesOnly";
    case ConfigKind::BoundAndResonances: return "BoundAndResonances";
    case ConfigKind::Inflection: return "Inflection";
    case ConfigKind::Monotone: return "Monotone";
    case ConfigKind::BoundOnly: return "BoundOnly";
  }
  return "?";
}

char config_class_letter(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::ResonancesOnly: return 'a';
    case ConfigKind::BoundAndResonances: return 'b';
    case ConfigKind::Monotone: return 'c';
    case ConfigKind::Inflection: return 'd';
    case ConfigKind::BoundOnly: return 'e';
  }
  return '?';
}

namespace {

// Taylor coefficients of (u0 + u1 tanh^2 z + u2 tanh^4 z)/sinh^2 z - u0/z^2
// in powers of z^2, one row per parameter; truncation error at |z| = 0.05 is
// below 4e-19 relative
constexpr int kSeriesTerms = 7;
constexpr double kSeriesRadius = 0.05;
constexpr double kA[kSeriesTerms] = {-1.0 / 3.0,      1.0 / 15.0,
                                     -2.0 / 189.0,    1.0 / 675.0,
                                     -2.0 / 10395.0,  1382.0 / 58046625.0,
                                     -4.0 / 1403325.0};
constexpr double kB[kSeriesTerms] = {1.0,          -1.0,
                                     2.0 / 3.0,    -17.0 / 45.0,
                                     62.0 / 315.0, -1382.0 / 14175.0,
                                     21844.0 / 467775.0};
constexpr double kC[kSeriesTerms] = {0.0,          1.0,
                                     -5.0 / 3.0,   77.0 / 45.0,
                                     -88.0 / 63.0, 14102.0 / 14175.0,
                                     -1729.0 / 2673.0};

Cplx regularized_series(const PotentialParams& p, Cplx z) {
  const double u0 = p.u0(), u1 = p.u1(), u2 = p.u2();
  const Cplx z2 = z * z;
  Cplx acc = 0.0;
  for (int k = kSeriesTerms - 1; k >= 0; --k)
    acc = acc * z2 + (u0 * kA[k] + u1 * kB[k] + u2 * kC[k]);
  return p.lambda * p.lambda * acc;
}

// past this depth sinh^2 overflows; 1/sinh^2 = 4 e^{-2z}/(1 - e^{-2z})^2 has
// already converged to its leading term
constexpr double kFarRe = 350.0;

Cplx regularized_direct(const PotentialParams& p, Cplx z) {
  const double u0 = p.u0(), u1 = p.u1(), u2 = p.u2();
  const double l2 = p.lambda * p.lambda;
  if (std::abs(z.real()) > kFarRe) {
    const Cplx e = std::exp(-2.0 * z);
    return l2 * ((u0 + u1 + u2) * 4.0 * e - u0 / (z * z));
  }
  const Cplx s = std::sinh(z);
  if (std::abs(s) < 1e-12)
    throw std::domain_error("potential pole: lambda r too close to i pi k");
  const Cplx t2 = std::pow(std::tanh(z), 2);
  return l2 * ((u0 + (u1 + u2 * t2) * t2) / (s * s) - u0 / (z * z));
}

} // namespace

Cplx eval_regularized(const PotentialParams& p, Cplx r) {
  const Cplx z = p.lambda * r;
  if (std::abs(z) < kSeriesRadius) return regularized_series(p, z);
  return regularized_direct(p, z);
}

Cplx eval_potential(const PotentialParams& p, Cplx r) {
  const Cplx z = p.lambda * r;
  if (z == Cplx(0.0, 0.0))
    throw std::domain_error("eval_potential: r = 0 is a singular point");
  const Cplx sing = p.u0() * p.lambda * p.lambda / (z * z);
  if (std::abs(z) < kSeriesRadius) return sing + regularized_series(p, z);
  return sing + regularized_direct(p, z);
}

double eval_potential_t(const PotentialParams& p, double t) {
  if (!(t > 0.0) || !(t < 1.0))
    throw std::domain_error("eval_potential_t: t must lie in (0,1)");
  const double l2 = p.lambda * p.lambda;
  return l2 * (1.0 - t) * (p.u0() + t * (p.u1() + t * p.u2())) / t;
}

std::array<double, 3> near_origin_coeffs(const PotentialParams& p) {
  const double l2 = p.lambda * p.lambda;
  return {p.v0 / l2, p.v1 - p.v0 / 3.0, p.v2 - p.v1 + p.v0 / 15.0};
}

double effective_ell(double u0, int ell) {
  if (ell < 0) throw std::domain_error("effective_ell: ell must be >= 0");
  const double h = ell + 0.5;
  const double disc = h * h + 2.0 * u0;
  if (!(disc > 0.0))
    throw std::domain_error("effective_ell: 1/r^2 attraction too strong, no "
                            "self-adjoint ground channel");
  return -0.5 + std::sqrt(disc);
}

namespace {

// d/dt of t * V(t) / lambda^2, cleared of denominators:
// g(t) = -2 u2 t^3 + (u2 - u1) t^2 - u0; interior critical points of V are its
// roots in (0,1)
double cubic_g(double u0, double u1, double u2, double t) {
  return t * t * ((u2 - u1) - 2.0 * u2 * t) - u0;
}

double bisect_root(double u0, double u1, double u2, double lo, double hi) {
  double flo = cubic_g(u0, u1, u2, lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = cubic_g(u0, u1, u2, mid);
    if (fm == 0.0) return mid;
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-15 * std::max(1.0, std::abs(lo))) break;
  }
  return 0.5 * (lo + hi);
}

} // namespace

ConfigClass classify_configuration(const PotentialParams& p) {
  const double u0 = p.u0(), u1 = p.u1(), u2 = p.u2();
  const double scale = std::max({std::abs(u0), std::abs(u1), std::abs(u2), 1.0});
  const double tol = 1e-9 * scale;
  // open-interval endpoints; g itself is exact there but V diverges / vanishes
  const double t_lo = 1e-12, t_hi = 1.0 - 1e-12;

  std::vector<double> roots;
  bool degenerate = false;

  if (u2 == 0.0) {
    // quadratic -u1 t^2 - u0
    if (u1 != 0.0) {
      const double t2 = -u0 / u1;
      if (t2 > 0.0) {
        const double t = std::sqrt(t2);
        if (t > t_lo && t < t_hi) roots.push_back(t);
      }
    }
  } else {
    const double tstar = (u2 - u1) / (3.0 * u2); // g'(t) = 0 besides t = 0
    std::vector<std::pair<double, double>> brackets;
    if (tstar > t_lo && tstar < t_hi) {
      if (std::abs(cubic_g(u0, u1, u2, tstar)) <= tol) degenerate = true;
      brackets = {{t_lo, tstar}, {tstar, t_hi}};
    } else {
      brackets = {{t_lo, t_hi}};
    }
    if (degenerate) {
      roots.push_back(tstar);
    } else {
      for (auto [lo, hi] : brackets) {
        const double flo = cubic_g(u0, u1, u2, lo);
        const double fhi = cubic_g(u0, u1, u2, hi);
        if ((flo < 0.0) != (fhi < 0.0)) roots.push_back(bisect_root(u0, u1, u2, lo, hi));
      }
    }
  }

  std::sort(roots.begin(), roots.end());

  ConfigClass out;
  for (double t : roots) out.critical_points.emplace_back(t, eval_potential_t(p, t));

  if (degenerate) {
    out.kind = ConfigKind::Inflection;
  } else if (roots.empty()) {
    out.kind = ConfigKind::Monotone;
  } else if (roots.size() == 1) {
    out.kind = ConfigKind::BoundOnly;
  } else {
    const double vmin = std::min(out.critical_points[0].second, out.critical_points[1].second);
    out.kind = vmin < 0.0 ? ConfigKind::BoundAndResonances : ConfigKind::ResonancesOnly;
  }
  return out;
}

} // namespace trapps
