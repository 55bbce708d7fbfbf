#include "trapps/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace trapps {

double RationalInterpolant::eval(double xq) const {
  if (a.empty()) throw std::logic_error("RationalInterpolant: empty");
  const int m = static_cast<int>(a.size());
  double v = a[m - 1];
  for (int k = m - 2; k >= 0; --k) {
    if (v == 0.0) v = 1e-300; // poleward step: keep the quotient finite
    v = a[k] + (xq - x[k]) / v;
  }
  return v;
}

RationalInterpolant build_thiele(const std::vector<double>& xs,
                                 const std::vector<double>& ys) {
  const size_t n = xs.size();
  if (n == 0 || ys.size() != n)
    throw std::invalid_argument("build_thiele: need equally many xs and ys");

  RationalInterpolant f;
  std::vector<double> gx, gv; // pending nodes and their current inverse differences
  gx.assign(xs.begin(), xs.end());
  gv.assign(ys.begin(), ys.end());

  while (!gx.empty()) {
    const double xk = gx.front();
    const double ak = gv.front();
    f.x.push_back(xk);
    f.a.push_back(ak);
    gx.erase(gx.begin());
    gv.erase(gv.begin());

    std::vector<double> nx, nv;
    nx.reserve(gx.size());
    nv.reserve(gv.size());
    for (size_t j = 0; j < gx.size(); ++j) {
      const double den = gv[j] - ak;
      // a vanishing inverse difference means the fraction built so far already
      // interpolates this node; keep it out of the support set
      if (std::abs(den) <= 1e-13 * (std::abs(gv[j]) + std::abs(ak)) || den == 0.0) {
        ++f.skipped;
        continue;
      }
      nx.push_back(gx[j]);
      nv.push_back((gx[j] - xk) / den);
    }
    gx.swap(nx);
    gv.swap(nv);
  }
  return f;
}

double max_node_error(const RationalInterpolant& f, const std::vector<double>& xs,
                      const std::vector<double>& ys) {
  double worst = 0.0;
  for (size_t i = 0; i < xs.size(); ++i)
    worst = std::max(worst, std::abs(f.eval(xs[i]) - ys[i]));
  return worst;
}

} // namespace trapps
