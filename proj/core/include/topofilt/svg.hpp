#pragma once

#include <string>

#include "topofilt/diagram.hpp"

namespace topofilt {

// Persistence diagram scatter plot: fixed 480x480 viewport, linear axes
// padded 5%, diagonal drawn, permanent intervals rendered in a top band.
// Dimension 0 plots as circles, dimension 1 as squares. Output is
// byte-deterministic for equal inputs.
std::string diagram_svg(const Diagram& d0, const Diagram* d1);

}  // namespace topofilt
