#pragma once

#include <string>

#include "trapps/eigen_kernels.hpp"

namespace trapps {

enum class Method { Pps, Hd, Cs };
enum class LevelClass { Bound, Resonance, Unstable };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::Pps: return "pps";
    case Method::Hd: return "hd";
    case Method::Cs: return "cs";
  }
  return "?";
}

inline std::string to_string(LevelClass c) {
  switch (c) {
    case LevelClass::Bound: return "bound";
    case LevelClass::Resonance: return "resonance";
    case LevelClass::Unstable: return "unstable";
  }
  return "?";
}

// one row of spectrum.csv; energies in lambda^2 units
struct SpectrumEntry {
  Method method = Method::Pps;
  int level = 0;
  Cplx energy;
  LevelClass cls = LevelClass::Bound;
  double rho = 0.0;   // 0 when not applicable
  double theta = 0.0;
  int N = 0;
};

} // namespace trapps
