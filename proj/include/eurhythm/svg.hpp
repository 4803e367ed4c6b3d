#pragma once

#include <string>

#include "eurhythm/rhythm.hpp"

namespace eurhythm {

/// Clock diagram: a circle with n tick marks, a dot per onset, the polygon
/// joining adjacent onsets, gap labels on the arcs, and the zero pulse
/// labelled at the top with time flowing clockwise. Output bytes depend
/// only on the rhythm.
std::string clock_svg(const Rhythm& r);

}  // namespace eurhythm
