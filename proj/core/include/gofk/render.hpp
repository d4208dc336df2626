#pragma once

#include <optional>
#include <string>

#include "gofk/curve.hpp"
#include "gofk/diagram.hpp"

namespace gofk {

// Cells as regular polygons along a horizontal strip, sides labelled with
// their edge and carrier, and the curve's chords as polylines between
// slot-proportional points.  Output depends only on the inputs.
std::string render_svg(const StandardDiagram& d, const std::optional<NormalCurve>& curve = std::nullopt);

}  // namespace gofk
