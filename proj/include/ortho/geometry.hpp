#pragma once

#include <string>
#include <vector>

#include "ortho/drawing.hpp"

namespace ortho {

struct GeometryViolation {
    std::string code;    // e.g. "OverlapViolation", "CrossingAtBend", "ColumnConflict"
    std::string detail;
};

using ValidationReport = std::vector<GeometryViolation>;

/// Full orthogonal-drawing validation: distinct vertex points, axis-parallel
/// routes joining their endpoints, overlaps forbidden, crossings allowed only
/// at single interior non-bend points, no route through a foreign vertex,
/// <= 4 ports with pairwise distinct departure directions per vertex.
ValidationReport validate(const Drawing& d, const Graph& g);

GridMetrics metrics(const Drawing& d);

/// Per-step check used by the layout engine: reserved columns are pairwise
/// distinct and unused above their anchors, and the routed prefixes do not
/// overlap.
ValidationReport check_partial(const PartialDrawing& pd);

}  // namespace ortho
