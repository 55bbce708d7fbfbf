#pragma once

#include <string>
#include <vector>

#include "trapps/cs.hpp"

namespace trapps::cli {

// static scatter of a classified spectrum in the complex energy plane
void write_spectrum_svg(const std::string& path, const ClassifiedSpectrum& spectrum);

} // namespace trapps::cli
