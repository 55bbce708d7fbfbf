#pragma once

#include <vector>

namespace trapps {

// Thiele continued-fraction interpolant
//   f(x) = a_0 + (x - x_0)/(a_1 + (x - x_1)/(a_2 + ...))
// nodes whose inverse difference degenerates (the fraction already passes
// through them) are dropped and counted in `skipped`
struct RationalInterpolant {
  std::vector<double> x; // support nodes actually used, in insertion order
  std::vector<double> a; // inverse differences a_k at x_k
  int skipped = 0;

  double eval(double xq) const;
};

RationalInterpolant build_thiele(const std::vector<double>& xs,
                                 const std::vector<double>& ys);

// largest |f(x_i) - y_i| over the original samples, for interpolation checks
double max_node_error(const RationalInterpolant& f, const std::vector<double>& xs,
                      const std::vector<double>& ys);

} // namespace trapps
