#pragma once

// Internal multi-curve SVG renderer shared by curve and network exports.

#include <string>
#include <vector>

#include "pelastica/curve.hpp"

namespace pelastica::detail {

std::string svg_multi(const std::vector<const SampledCurve*>& curves);

}  // namespace pelastica::detail
