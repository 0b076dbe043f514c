#pragma once

#include <string>

#include "apexrep/arrangement.hpp"

namespace apexrep {

inline constexpr const char* kGeneratorVersion = "apexrep 0.1.0";

struct SvgStyle {
  // Gaps between consecutive distinct coordinates (per axis) narrower than
  // this many units are drawn at this width. The remap is monotone in each
  // axis, so which horizontal and vertical segments meet is unchanged.
  double min_gap = 0.25;
  double pixels_per_unit = 48.0;
  double margin = 24.0;
};

// One <line> per segment: the apex in black, originals in blue, and the
// pieces of each edge curve in a per-edge colour. The header comments name
// the generator and the exaggeration applied.
std::string render_svg(const Arrangement& arr, const SvgStyle& style = {});

}  // namespace apexrep
