#include "trapps/cs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "parallel.hpp"
#include "trapps/orthopoly.hpp"

namespace trapps {

CMat CSymTridiag::dense() const {
  const int N = size();
  CMat M = CMat::Zero(N, N);
  for (int i = 0; i < N; ++i) {
    M(i, i) = diag[i];
    if (i + 1 < N) M(i, i + 1) = M(i + 1, i) = sub[i];
  }
  return M;
}

CsConfig make_cs_config(const PotentialParams& p, int ell, double rho, double theta,
                        int N, int K_quad) {
  if (!(rho > 0.0)) throw std::domain_error("make_cs_config: rho must be positive");
  if (!(theta >= 0.0) || !(theta < M_PI / 2))
    throw std::domain_error("make_cs_config: theta must lie in [0, pi/2)");
  if (N < 1) throw std::domain_error("make_cs_config: N must be >= 1");
  if (ell < 0) throw std::domain_error("make_cs_config: ell must be >= 0");
  if (K_quad == 0) K_quad = N + 20;
  if (K_quad < N + 10)
    throw std::domain_error("make_cs_config: quadrature order must be >= N + 10");
  CsConfig cfg;
  cfg.ell = ell;
  cfg.ell_eff = effective_ell(p.u0(), ell);
  cfg.rho = rho;
  cfg.theta = theta;
  cfg.N = N;
  cfg.K_quad = K_quad;
  return cfg;
}

CSymTridiag cs_kinetic(const CsConfig& cfg) {
  const double lt = cfg.ell_eff;
  const Cplx g2 = cfg.gamma() * cfg.gamma();
  CSymTridiag T;
  T.diag.resize(cfg.N);
  T.sub.resize(cfg.N - 1);
  for (int n = 0; n < cfg.N; ++n) {
    T.diag[n] = 0.25 * g2 * (n + lt + 1.0);
    if (n + 1 < cfg.N)
      T.sub[n] = 0.125 * g2 * std::sqrt((n + 1.0) * (n + 2.0 * lt + 2.0));
  }
  return T;
}

SymTridiag cs_overlap(const CsConfig& cfg) {
  const double lt = cfg.ell_eff;
  SymTridiag Om;
  Om.diag.resize(cfg.N);
  Om.sub.resize(cfg.N - 1);
  for (int n = 0; n < cfg.N; ++n) {
    Om.diag[n] = 2.0 * (n + lt + 1.0);
    if (n + 1 < cfg.N) Om.sub[n] = -std::sqrt((n + 1.0) * (n + 2.0 * lt + 2.0));
  }
  return Om;
}

CMat cs_potential_matrix(const PotentialParams& p, const CsConfig& cfg) {
  if (cfg.K_quad < cfg.N + 10)
    throw std::domain_error("cs_potential_matrix: quadrature order must be >= N + 10");
  const QuadratureRule rule = gauss_laguerre(2.0 * cfg.ell_eff + 1.0, cfg.K_quad);
  const Mat G = laguerre_ortho_rows(rule, cfg.N);
  const Cplx g = cfg.gamma();
  // dimensionless throughout: the radial argument is y/g in units of 1/lambda,
  // so evaluate the regularized tail with lambda scaled out
  const PotentialParams pd = params_from_u(1.0, p.u0(), p.u1(), p.u2());
  CVec f(cfg.K_quad);
  for (int k = 0; k < cfg.K_quad; ++k)
    f[k] = rule.nodes[k] * eval_regularized(pd, rule.nodes[k] / g);
  // lower triangle + mirror: keeps the matrix complex symmetric exactly
  CMat V(cfg.N, cfg.N);
  for (int i = 0; i < cfg.N; ++i)
    for (int j = 0; j <= i; ++j) {
      Cplx acc = 0.0;
      for (int k = 0; k < cfg.K_quad; ++k) acc += G(i, k) * G(j, k) * f[k];
      V(i, j) = V(j, i) = acc;
    }
  return V;
}

HarrisSet harris_eigenvalues(const PotentialParams& p, const CsConfig& cfg) {
  const CMat H = cs_kinetic(cfg).dense() + cs_potential_matrix(p, cfg);
  const Mat B = cs_overlap(cfg).dense();
  const CEigResult eig = eig_gen_complex(H, B);
  HarrisSet out;
  out.config = cfg;
  out.values.assign(eig.values.data(), eig.values.data() + eig.values.size());
  return out;
}

namespace {

struct MatchedPair {
  int index = 0;      // into run_a
  double drift = 0.0; // |a_i - b_j| / (1 + |a_i|)
};

// pair each run_a eigenvalue with a distinct run_b partner, smallest
// normalized distances first
std::vector<MatchedPair> match_pairs(const std::vector<Cplx>& a,
                                     const std::vector<Cplx>& b) {
  struct Cand {
    double d;
    int i, j;
  };
  std::vector<Cand> cands;
  cands.reserve(a.size() * b.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      cands.push_back({std::abs(a[i] - b[j]) / (1.0 + std::abs(a[i])),
                       static_cast<int>(i), static_cast<int>(j)});
  std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
    if (x.d != y.d) return x.d < y.d;
    if (x.i != y.i) return x.i < y.i;
    return x.j < y.j;
  });
  std::vector<char> used_a(a.size(), 0), used_b(b.size(), 0);
  std::vector<MatchedPair> out;
  for (const Cand& c : cands) {
    if (used_a[c.i] || used_b[c.j]) continue;
    used_a[c.i] = used_b[c.j] = 1;
    out.push_back({c.i, c.d});
    if (out.size() == std::min(a.size(), b.size())) break;
  }
  for (size_t i = 0; i < a.size(); ++i)
    if (!used_a[i])
      out.push_back({static_cast<int>(i), std::numeric_limits<double>::infinity()});
  return out;
}

} // namespace

ClassifiedSpectrum classify_eigenvalues(const HarrisSet& run_a, const HarrisSet& run_b,
                                        double tol, double tol_bound) {
  if (!(tol > 0.0)) throw std::domain_error("classify_eigenvalues: tol must be > 0");
  ClassifiedSpectrum out;
  out.theta = run_a.config.theta;
  for (const MatchedPair& mp : match_pairs(run_a.values, run_b.values)) {
    const Cplx e = run_a.values[mp.index];
    if (!(mp.drift <= tol)) {
      out.unstable.push_back({e, mp.drift});
      continue;
    }
    const double im_scale = tol_bound * (1.0 + std::abs(e));
    if (std::abs(e.imag()) <= im_scale && e.real() < 0.0) {
      out.bound.push_back(e);
    } else if (std::abs(e.imag()) > im_scale && std::arg(e) > -2.0 * out.theta &&
               std::arg(e) < 0.0) {
      out.resonances.push_back(e);
    } else {
      // survived the perturbation but sits outside both admissible regions
      out.unstable.push_back({e, mp.drift});
    }
  }
  const auto by_re = [](const Cplx& x, const Cplx& y) { return x.real() < y.real(); };
  std::sort(out.bound.begin(), out.bound.end(), by_re);
  std::sort(out.resonances.begin(), out.resonances.end(), by_re);
  std::sort(out.unstable.begin(), out.unstable.end(),
            [](const UnstableEigenvalue& x, const UnstableEigenvalue& y) {
              if (x.value.real() != y.value.real())
                return x.value.real() < y.value.real();
              return x.value.imag() < y.value.imag();
            });
  return out;
}

ClassifiedSpectrum classify_spectrum(const PotentialParams& p, int ell, double rho,
                                     double theta, int N, const StabilityOptions& opt) {
  const CsConfig ca = make_cs_config(p, ell, rho, theta, N, opt.K_quad);
  const CsConfig cb =
      make_cs_config(p, ell, rho * opt.drho, theta + opt.dtheta, N, opt.K_quad);
  HarrisSet runs[2];
  detail::parallel_for(2, [&](int i) {
    runs[i] = harris_eigenvalues(p, i == 0 ? ca : cb);
  });
  return classify_eigenvalues(runs[0], runs[1], opt.tol, opt.tol_bound);
}

std::vector<SweepFrame> sweep_v1(const PotentialParams& p_base,
                                 const std::vector<double>& v1_grid, int ell,
                                 double rho, double theta, int N,
                                 const StabilityOptions& opt) {
  std::vector<SweepFrame> frames(v1_grid.size());
  detail::parallel_for(static_cast<int>(v1_grid.size()), [&](int i) {
    frames[i].v1 = v1_grid[i];
    try {
      const PotentialParams p =
          params_from_u(p_base.lambda, p_base.u0(), v1_grid[i], p_base.u2());
      frames[i].spectrum = classify_spectrum(p, ell, rho, theta, N, opt);
    } catch (const std::exception& ex) {
      frames[i].error = ex.what();
    }
  });
  return frames;
}

RhoScanResult scan_rho(const PotentialParams& p, int ell, double theta, int N,
                       const std::vector<double>& rho_candidates,
                       const StabilityOptions& opt) {
  if (rho_candidates.empty())
    throw std::domain_error("scan_rho: need at least one candidate");
  RhoScanResult out;
  out.entries.resize(rho_candidates.size());
  detail::parallel_for(static_cast<int>(rho_candidates.size()), [&](int i) {
    const double rho = rho_candidates[i];
    const HarrisSet ra =
        harris_eigenvalues(p, make_cs_config(p, ell, rho, theta, N, opt.K_quad));
    const HarrisSet rb = harris_eigenvalues(
        p, make_cs_config(p, ell, rho * opt.drho, theta + opt.dtheta, N, opt.K_quad));
    RhoScanEntry& e = out.entries[i];
    e.rho = rho;
    std::vector<double> drifts;
    for (const MatchedPair& mp : match_pairs(ra.values, rb.values))
      if (mp.drift <= opt.tol) drifts.push_back(mp.drift);
    e.kept = static_cast<int>(drifts.size());
    // tie-break on how tightly the kept set sits still
    if (drifts.empty()) {
      e.median_drift = std::numeric_limits<double>::infinity();
    } else {
      std::sort(drifts.begin(), drifts.end());
      const size_t h = drifts.size() / 2;
      e.median_drift =
          (drifts.size() % 2) ? drifts[h] : 0.5 * (drifts[h - 1] + drifts[h]);
    }
  });
  const RhoScanEntry* best = &out.entries[0];
  for (const auto& e : out.entries)
    if (e.kept > best->kept ||
        (e.kept == best->kept && e.median_drift < best->median_drift))
      best = &e;
  out.best_rho = best->rho;
  return out;
}

} // namespace trapps
