#pragma once

#include <string>

#include "ortho/canonical.hpp"
#include "ortho/drawing.hpp"
#include "ortho/graph.hpp"
#include "ortho/layout.hpp"

namespace ortho {

struct RenderOptions {
    int cell_size = 24;  // pixels per grid unit (SVG)
    bool show_grid = false;
    bool label_vertices = true;
};

/// Edge-list format: optional '#' comments, first data line "n m", then m
/// lines "u v".  Errors carry 1-based line numbers.
Graph parse_graph(const std::string& text);

/// Vertices as squares, edges as orthogonal paths; row 1 at the bottom.
std::string emit_svg(const Drawing& d, const RenderOptions& opts = {});

/// Character grid: 'o' vertices, '-'/'|' segments, '+' bends, 'x' crossings.
/// Throws TooLarge when width or height exceeds 500.
std::string emit_ascii(const Drawing& d);

/// Machine interface of record; diag adds order/pairing/ledger diagnostics.
std::string emit_json(const Drawing& d, const GridMetrics& m, const DrawResult* diag = nullptr);

/// Order serialization: JSON array of groups
/// {"type":"singleton"|"chain","vertices":[...]}.
std::string order_to_json(const CanonicalOrder& order);
CanonicalOrder order_from_json(const std::string& text);

}  // namespace ortho
