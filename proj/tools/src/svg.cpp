#include "cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "cli/csvio.hpp"

namespace trapps::cli {

namespace {

struct Mapper {
  double re_lo, re_hi, im_lo, im_hi;
  double w, h, margin;

  double x(double re) const {
    return margin + (re - re_lo) / (re_hi - re_lo) * (w - 2 * margin);
  }
  double y(double im) const {
    return margin + (im_hi - im) / (im_hi - im_lo) * (h - 2 * margin);
  }
};

void expand(double v, double& lo, double& hi) {
  lo = std::min(lo, v);
  hi = std::max(hi, v);
}

} // namespace

void write_spectrum_svg(const std::string& path, const ClassifiedSpectrum& s) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + path);

  double re_lo = -1.0, re_hi = 1.0, im_lo = -1.0, im_hi = 0.5;
  for (const auto& e : s.bound) {
    expand(e.real(), re_lo, re_hi);
    expand(e.imag(), im_lo, im_hi);
  }
  for (const auto& e : s.resonances) {
    expand(e.real(), re_lo, re_hi);
    expand(e.imag(), im_lo, im_hi);
  }
  const double pad_re = 0.08 * (re_hi - re_lo), pad_im = 0.08 * (im_hi - im_lo);
  const Mapper m{re_lo - pad_re, re_hi + pad_re, im_lo - pad_im, im_hi + pad_im,
                 640.0,          420.0,          40.0};

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\" "
         "viewBox=\"0 0 640 420\">\n";
  out << "<rect width=\"640\" height=\"420\" fill=\"white\"/>\n";

  // axes through the origin of the energy plane
  out << "<line x1=\"" << fmt(m.x(m.re_lo)) << "\" y1=\"" << fmt(m.y(0)) << "\" x2=\""
      << fmt(m.x(m.re_hi)) << "\" y2=\"" << fmt(m.y(0))
      << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  if (m.re_lo < 0.0 && m.re_hi > 0.0)
    out << "<line x1=\"" << fmt(m.x(0)) << "\" y1=\"" << fmt(m.y(m.im_lo))
        << "\" x2=\"" << fmt(m.x(0)) << "\" y2=\"" << fmt(m.y(m.im_hi))
        << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";

  // rotated-continuum ray at angle -2 theta from the origin
  if (s.theta > 0.0 && m.re_hi > 0.0) {
    const double ang = -2.0 * s.theta;
    const double rr = std::hypot(m.re_hi, m.im_lo);
    out << "<line x1=\"" << fmt(m.x(0)) << "\" y1=\"" << fmt(m.y(0)) << "\" x2=\""
        << fmt(m.x(rr * std::cos(ang))) << "\" y2=\"" << fmt(m.y(rr * std::sin(ang)))
        << "\" stroke=\"#bbb\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
  }

  for (const auto& u : s.unstable)
    out << "<circle cx=\"" << fmt(m.x(u.value.real())) << "\" cy=\""
        << fmt(m.y(u.value.imag())) << "\" r=\"2\" fill=\"#ccc\"/>\n";
  for (const auto& e : s.bound)
    out << "<circle cx=\"" << fmt(m.x(e.real())) << "\" cy=\"" << fmt(m.y(e.imag()))
        << "\" r=\"5\" fill=\"#1f77b4\"/>\n";
  for (const auto& e : s.resonances)
    out << "<circle cx=\"" << fmt(m.x(e.real())) << "\" cy=\"" << fmt(m.y(e.imag()))
        << "\" r=\"5\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";

  out << "<text x=\"" << fmt(m.x(m.re_hi) - 60) << "\" y=\"" << fmt(m.y(0) - 8)
      << "\" font-size=\"12\" fill=\"#444\">Re E</text>\n";
  out << "<text x=\"" << fmt(m.x(0.0) + 8) << "\" y=\"" << fmt(m.y(m.im_hi) + 14)
      << "\" font-size=\"12\" fill=\"#444\">Im E</text>\n";
  out << "</svg>\n";
}

} // namespace trapps::cli
