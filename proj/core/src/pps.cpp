#include "trapps/pps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parallel.hpp"
#include "trapps/orthopoly.hpp"
#include "trapps/tra.hpp"

namespace trapps {

std::vector<double> chebyshev_grid(double lo, double hi, int count) {
  if (count < 1) throw std::domain_error("chebyshev_grid: count must be >= 1");
  if (!(lo < hi)) throw std::domain_error("chebyshev_grid: need lo < hi");
  std::vector<double> g(count);
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  for (int i = 0; i < count; ++i)
    g[i] = mid + half * std::cos(M_PI * (i + 0.5) / count);
  std::sort(g.begin(), g.end());
  return g;
}

namespace {

Vec sigma_eigenvalues(double eps, double u0, double u2, int N) {
  const BasisParams bp = basis_params(eps, u0);
  return eig_sym_tridiag(build_sigma(bp, u2, N)).values;
}

double eta_m(double eps, double u0, double u2, int N, int m) {
  return sigma_eigenvalues(eps, u0, u2, N)[m];
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

} // namespace

std::vector<ParameterCurve> parameter_curves(double u0, double u2, int N,
                                             const std::vector<double>& eps_grid,
                                             int M) {
  if (M < 1 || M > N)
    throw std::domain_error("parameter_curves: need 1 <= M <= N");
  for (double e : eps_grid)
    if (!(e < 0.0))
      throw std::domain_error("parameter_curves: grid energies must be negative");

  const int G = static_cast<int>(eps_grid.size());
  std::vector<Vec> etas(G);
  std::vector<char> ok(G, 0);
  std::vector<std::string> point_warnings(G);
  detail::parallel_for(G, [&](int i) {
    try {
      etas[i] = sigma_eigenvalues(eps_grid[i], u0, u2, N).head(M);
      ok[i] = 1;
    } catch (const std::exception& ex) {
      point_warnings[i] =
          "grid point eps = " + fmt(eps_grid[i]) + " skipped: " + ex.what();
    }
  });

  std::vector<ParameterCurve> curves(M);
  for (int m = 0; m < M; ++m) {
    ParameterCurve& c = curves[m];
    c.m = m;
    for (int i = 0; i < G; ++i) {
      if (!ok[i]) {
        if (m == 0 && !point_warnings[i].empty()) c.warnings.push_back(point_warnings[i]);
        continue;
      }
      c.eps.push_back(eps_grid[i]);
      c.u1.push_back(0.5 * (0.25 - etas[i][m]));
    }
    if (c.eps.size() < 4)
      throw std::runtime_error("parameter_curves: curve " + std::to_string(m) +
                               " has fewer than 4 surviving sample points");
    c.fit = build_thiele(c.eps, c.u1);
    double scale = 1.0;
    for (double v : c.u1) scale = std::max(scale, std::abs(v));
    const double err = max_node_error(c.fit, c.eps, c.u1);
    if (err > 1e-9 * scale)
      c.warnings.push_back("curve " + std::to_string(m) +
                           ": fit misses its own samples by " + fmt(err));
  }
  return curves;
}

double default_eps_min(double u0, double u1, double u2) {
  return -(std::abs(u0) + std::abs(u1) + std::abs(u2) + 1.0);
}

namespace {

struct BrentResult {
  double root;
  int iterations;
};

// standard Brent root bracketing; fa, fb are f at the endpoints
template <typename F>
BrentResult brent(F&& f, double a, double b, double fa, double fb, double xtol) {
  if ((fa > 0.0) == (fb > 0.0))
    throw std::invalid_argument("brent: endpoints do not bracket a root");
  double c = a, fc = fa, d = b - a, e = d;
  int it = 0;
  for (; it < 200; ++it) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a; fc = fa; d = b - a; e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * 2.22e-16 * std::abs(b) + 0.5 * xtol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) break;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc; r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d; d = p / q;
      } else {
        d = xm; e = d;
      }
    } else {
      d = xm; e = d;
    }
    a = b; fa = fb;
    b += std::abs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  return {b, it};
}

} // namespace

std::vector<double> PpsSpectrum::energies() const {
  std::vector<double> e;
  e.reserve(levels.size());
  for (const auto& l : levels) e.push_back(l.eps);
  return e;
}

PpsSpectrum pps_spectrum(double u0, double u1, double u2, int N, double eps_min,
                         int grid) {
  if (N < 1) throw std::domain_error("pps_spectrum: N must be >= 1");
  if (grid < 4) throw std::domain_error("pps_spectrum: grid must be >= 4");
  if (eps_min == 0.0) eps_min = default_eps_min(u0, u1, u2);
  const double eps_hi = -1e-6;
  if (!(eps_min < eps_hi))
    throw std::domain_error("pps_spectrum: eps_min must lie below -1e-6");

  const double target = 0.25 - 2.0 * u1;

  // a curve can cross the target line only if it gets above it near eps -> 0-;
  // one extra curve guards against the shallow-edge sample missing a crossing
  const Vec eta_edge = sigma_eigenvalues(eps_hi, u0, u2, N);
  int M = 1;
  for (int m = 0; m < N; ++m)
    if (0.5 * (0.25 - eta_edge[m]) >= u1) M = std::min(m + 2, N);

  PpsSpectrum out;
  const std::vector<double> eps_grid = chebyshev_grid(eps_min, eps_hi, grid);
  const std::vector<ParameterCurve> curves = parameter_curves(u0, u2, N, eps_grid, M);
  for (const auto& c : curves)
    out.warnings.insert(out.warnings.end(), c.warnings.begin(), c.warnings.end());

  std::vector<std::vector<PpsLevel>> per_curve(M);
  std::vector<std::vector<std::string>> per_warn(M);
  detail::parallel_for(M, [&](int m) {
    const ParameterCurve& c = curves[m];
    const auto g = [&](double e) { return eta_m(e, u0, u2, N, m) - target; };
    const int scan = 512;
    const double step = (eps_hi - eps_min) / scan;
    double prev_x = eps_min;
    double prev_f = c.fit.eval(prev_x) - u1;
    for (int i = 1; i <= scan; ++i) {
      const double x = (i == scan) ? eps_hi : eps_min + i * step;
      const double fx = c.fit.eval(x) - u1;
      if ((prev_f > 0.0) != (fx > 0.0)) {
        // the fit brackets a root; confirm on the exact curve, widening a few
        // cells if the fit's crossing is slightly displaced
        double a = prev_x, b = x;
        double ga = g(a), gb = g(b);
        for (int widen = 0; widen < 3 && (ga > 0.0) == (gb > 0.0); ++widen) {
          a = std::max(eps_min, a - step);
          b = std::min(eps_hi, b + step);
          ga = g(a);
          gb = g(b);
        }
        if ((ga > 0.0) == (gb > 0.0)) {
          per_warn[m].push_back("curve " + std::to_string(m) +
                                ": fit crossing near eps = " + fmt(0.5 * (a + b)) +
                                " not confirmed by the matrix, dropped");
        } else {
          const auto polished = brent(g, a, b, ga, gb, 1e-13);
          // root of the fit alone, for the bracket-vs-polish diagnostic
          const auto ffit = [&](double e) { return c.fit.eval(e) - u1; };
          const auto fit_root = brent(ffit, prev_x, x, prev_f, fx, 1e-13);
          PpsLevel lvl;
          lvl.eps = polished.root;
          lvl.curve = m;
          lvl.bracket_lo = a;
          lvl.bracket_hi = b;
          lvl.iterations = polished.iterations;
          lvl.fit_root = fit_root.root;
          lvl.fit_disagrees = std::abs(fit_root.root - polished.root) > 1e-6;
          if (lvl.fit_disagrees)
            per_warn[m].push_back("curve " + std::to_string(m) +
                                  ": fit root disagrees with polished root at eps = " +
                                  fmt(polished.root));
          per_curve[m].push_back(lvl);
        }
      }
      prev_x = x;
      prev_f = fx;
    }
  });

  for (int m = 0; m < M; ++m) {
    out.levels.insert(out.levels.end(), per_curve[m].begin(), per_curve[m].end());
    out.warnings.insert(out.warnings.end(), per_warn[m].begin(), per_warn[m].end());
  }
  std::sort(out.levels.begin(), out.levels.end(),
            [](const PpsLevel& a, const PpsLevel& b) { return a.eps < b.eps; });
  out.levels.erase(std::unique(out.levels.begin(), out.levels.end(),
                               [](const PpsLevel& a, const PpsLevel& b) {
                                 return std::abs(a.eps - b.eps) <=
                                        1e-9 * (1.0 + std::abs(a.eps));
                               }),
                   out.levels.end());
  return out;
}

Wavefunction reconstruct_wavefunction(double eps, double u0, double u1, double u2,
                                      const std::vector<double>& r_grid,
                                      int n_terms, int n_scan) {
  if (n_terms < 2)
    throw std::domain_error("reconstruct_wavefunction: n_terms must be >= 2");
  if (n_scan < 5)
    throw std::domain_error("reconstruct_wavefunction: n_scan must be >= 5");
  if (r_grid.empty())
    throw std::domain_error("reconstruct_wavefunction: empty r grid");

  const int L = std::max(n_terms, n_scan);
  const BasisParams bp = basis_params(eps, u0);
  const std::vector<double> P = eval_P(bp, u1, u2, L);
  const JacobiBasisSpec spec{bp.mu, bp.nu, 1.0};
  const int R = static_cast<int>(r_grid.size());

  Mat phi(L, R);
  for (int n = 0; n < L; ++n)
    for (int r = 0; r < R; ++r) phi(n, r) = jacobi_basis_eval(spec, n, r_grid[r]);

  StabilityReport rep;
  rep.change.resize(L);
  for (int k = 0; k < L; ++k)
    rep.change[k] = std::abs(P[k]) * phi.row(k).cwiseAbs().maxCoeff();

  int kmin = 1;
  for (int k = 2; k < L; ++k)
    if (rep.change[k] < rep.change[kmin]) kmin = k;
  const int lo = std::max(1, kmin - 2), hi = std::min(L - 1, kmin + 2);
  std::vector<double> window(rep.change.begin() + lo, rep.change.begin() + hi + 1);
  std::sort(window.begin(), window.end());
  const size_t w = window.size();
  const double med =
      (w % 2) ? window[w / 2] : 0.5 * (window[w / 2 - 1] + window[w / 2]);
  int onset = L;
  for (int k = kmin + 1; k < L; ++k)
    if (rep.change[k] > 10.0 * med) {
      onset = k;
      break;
    }
  rep.critical_n = onset + 1;
  rep.plateau_n = kmin + 1;

  Wavefunction out;
  out.report = rep;
  Vec psi = Vec::Zero(R);
  for (int n = 0; n < n_terms; ++n) psi += P[n] * phi.row(n).transpose();
  const double top = psi.cwiseAbs().maxCoeff();
  if (top > 0.0) psi /= top;
  out.values.assign(psi.data(), psi.data() + R);
  return out;
}

} // namespace trapps
