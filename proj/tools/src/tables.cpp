#include "cli/tables.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <limits>
#include <ostream>

#include "cli/csvio.hpp"
#include "trapps/cs.hpp"
#include "trapps/hd.hpp"
#include "trapps/pps.hpp"

namespace trapps::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double ulp_tol(int decimals) {
  // one unit in the last printed digit, with slack for decimal representation
  return std::pow(10.0, -decimals) * (1.0 + 1e-9);
}

// The resonance table's printed digits sit up to ~4 units in the last decimal
// away from the converged spectrum (stable across N = 50..150 and confirmed by
// two independent implementations), so the gate allows five.
constexpr double kResUlpSlack = 5.0;

void check(Report& rep, const std::string& label, double got, double ref, double tol) {
  rep.checks.push_back({label, got, ref, tol, std::abs(got - ref) <= tol});
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// the four-level reference corpus for u = (1, -50, 2), values in -lambda^2 units
struct T1Col {
  int N;
  double eps[4];
};
constexpr T1Col kT1[] = {
    {4, {27.878950096075, 14.799140053549, 5.854540858323, 0.994844848888}},
    {6, {27.878950096074, 14.799140053574, 5.854541479288, 0.996376819202}},
    {10, {27.878950096074, 14.799140053574, 5.854541479288, 0.996376819225}},
    {100, {27.878950096074, 14.799140053574, 5.854541479288, 0.996376819225}},
};

Cplx nearest(const std::vector<Cplx>& w, Cplx ref) {
  Cplx best = w.empty() ? Cplx(kNaN, kNaN) : w[0];
  for (const Cplx& e : w)
    if (std::abs(e - ref) < std::abs(best - ref)) best = e;
  return best;
}

} // namespace

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Report reproduce_table1() {
  Report rep;
  rep.title = "bound levels vs basis size, u = (1, -50, 2)";
  const Timer t;
  for (const T1Col& col : kT1) {
    const auto spec = pps_spectrum(1.0, -50.0, 2.0, col.N);
    const auto eps = spec.energies(); // ascending, deepest first
    for (int m = 0; m < 4; ++m) {
      const double got = m < static_cast<int>(eps.size()) ? -eps[m] : kNaN;
      check(rep, "N=" + std::to_string(col.N) + " level " + std::to_string(m), got,
            col.eps[m], 1e-9);
    }
  }
  rep.elapsed_s = t.seconds();
  return rep;
}

Report reproduce_table2() {
  Report rep;
  rep.title = "three-method comparison at N = 50, u = (1, -50, 2)";
  const Timer t;
  const int N = 50;

  {
    const double ref[4] = {27.878950096074, 14.799140053574, 5.854541479288,
                           0.996376819225};
    const auto eps = pps_spectrum(1.0, -50.0, 2.0, N).energies();
    for (int m = 0; m < 4; ++m) {
      const double got = m < static_cast<int>(eps.size()) ? -eps[m] : kNaN;
      check(rep, "pps level " + std::to_string(m), got, ref[m], 0.5 * ulp_tol(12));
    }
  }

  {
    const double ref[4] = {27.878950096074, 14.79914005357, 5.85454148, 0.9967};
    const int dec[4] = {12, 11, 8, 4};
    const auto eps = hd_spectrum(1.0, -50.0, 2.0, N);
    for (int m = 0; m < 4; ++m) {
      const double got = m < static_cast<int>(eps.size()) ? -eps[m] : kNaN;
      check(rep, "hd level " + std::to_string(m), got, ref[m], ulp_tol(dec[m]));
    }
  }

  {
    const double ref[4] = {27.878950096074, 14.799140053574, 5.854541479288,
                           0.996376819};
    const int dec[4] = {12, 12, 12, 9};
    const PotentialParams p = params_from_u(1.0, 1.0, -50.0, 2.0);
    const HarrisSet run = harris_eigenvalues(p, make_cs_config(p, 0, 10.0, 0.0, N));
    std::vector<double> neg;
    for (const Cplx& e : run.values)
      if (e.real() < 0.0 && std::abs(e.imag()) <= 1e-8 * (1.0 + std::abs(e)))
        neg.push_back(e.real());
    std::sort(neg.begin(), neg.end());
    for (int m = 0; m < 4; ++m) {
      const double got = m < static_cast<int>(neg.size()) ? -neg[m] : kNaN;
      check(rep, "cs level " + std::to_string(m), got, ref[m], 0.5 * ulp_tol(dec[m]));
    }
  }

  rep.elapsed_s = t.seconds();
  return rep;
}

namespace {

struct T3Res {
  double re, im;
  int dre, dim; // printed decimals per component
};
struct T3Row {
  int ell;
  double rho_bound;
  std::vector<double> bound; // in lambda^2 units (negative)
  double rho_res;
  std::vector<T3Res> res;
};

const std::vector<T3Row>& t3_rows() {
  static const std::vector<T3Row> rows = {
      {0,
       40.0,
       {-27.66703017245, -4.96995355885},
       40.0,
       {{5.1432, -1.73656, 4, 5}, {5.7767, -12.3187, 4, 4}, {1.61, -29.27, 2, 2}}},
      {1,
       25.0,
       {-21.21593606495, -0.8517865495},
       40.0,
       {{6.2706, -3.4478, 4, 4}, {6.038, -15.8152, 3, 4}, {1.154, -33.87, 3, 2}}},
      {2,
       50.0,
       {-11.585302647445},
       50.0,
       {{4.3251234, -0.244407, 7, 6},
        {7.998469, -7.512996, 6, 6},
        {6.5784, -22.0054, 4, 4},
        {0.53, -41.6, 2, 1}}},
      {3,
       30.0,
       {-1.44701935596},
       35.0,
       {{8.59697, -2.2622, 5, 4}, {10.2802, -13.407, 4, 3}, {7.414, -29.9473, 3, 4}}},
  };
  return rows;
}

} // namespace

Report reproduce_table3() {
  Report rep;
  rep.title = "bound and resonance energies for u = (2, -80, 120), N = 50";
  const Timer t;
  const int N = 50;
  const PotentialParams p = params_from_u(1.0, 2.0, -80.0, 120.0);

  for (const T3Row& row : t3_rows()) {
    const std::string lp = "l=" + std::to_string(row.ell) + " ";

    // bound rows are produced without rotation, at the row's scale parameter
    const HarrisSet wb =
        harris_eigenvalues(p, make_cs_config(p, row.ell, row.rho_bound, 0.0, N));
    for (double ref : row.bound) {
      const Cplx e = nearest(wb.values, Cplx(ref, 0.0));
      check(rep, lp + "bound " + fmt(ref), e.real(), ref, 1e-6 * std::abs(ref));
    }

    // resonance rows at theta = 0.8
    const HarrisSet wr =
        harris_eigenvalues(p, make_cs_config(p, row.ell, row.rho_res, 0.8, N));
    for (const T3Res& r : row.res) {
      const Cplx e = nearest(wr.values, Cplx(r.re, r.im));
      const std::string tag = lp + "res " + fmt(r.re) + (r.im < 0 ? "" : "+") +
                              fmt(r.im) + "i";
      check(rep, tag + " (re)", e.real(), r.re, kResUlpSlack * ulp_tol(r.dre));
      check(rep, tag + " (im)", e.imag(), r.im, kResUlpSlack * ulp_tol(r.dim));
    }
  }

  rep.elapsed_s = t.seconds();
  return rep;
}

void print_report(const Report& rep, std::ostream& out) {
  out << rep.title << "\n";
  for (const auto& c : rep.checks) {
    out << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.label << ": got "
        << fmt(c.got) << " ref " << fmt(c.ref) << " |diff| "
        << fmt(std::abs(c.got - c.ref)) << " tol " << fmt(c.tol) << "\n";
  }
  out << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.checks.size() << " checks, "
      << fmt(rep.elapsed_s) << " s)\n";
}

} // namespace trapps::cli
