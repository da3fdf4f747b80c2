#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flipforge/heawood.h"
#include "flipforge/signing.h"
#include "flipforge/triangulation.h"

namespace flipforge {

/// One drawn polygon: vertices on a regular (n+2)-gon with 0 at the top and
/// labels increasing clockwise, diagonals as chords, faces filled by color
/// and marked with their sign.
struct Panel {
  Triangulation triangulation;
  std::optional<Coloring> colors;
  std::optional<Coloring> signs;
  std::string title;
};

/// Panels side by side in one SVG document. Coordinates carry 6 decimals.
std::string render_svg(const std::vector<Panel>& panels);

/// Northern and southern hemispheres as two panels.
std::vector<Panel> sphere_panels(const SphereTriangulation& s);

/// One panel per signed word: phi of its absolute value, signed by its bars.
std::vector<Panel> certificate_panels(const Certificate& cert);

}  // namespace flipforge
