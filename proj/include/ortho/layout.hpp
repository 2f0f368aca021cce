#pragma once

#include <vector>

#include "ortho/canonical.hpp"
#include "ortho/drawing.hpp"
#include "ortho/graph.hpp"
#include "ortho/pairing.hpp"

namespace ortho {

enum class PlacementStrategy { Simple, Paired };

/// Golden layout constants, locked by tests.
inline constexpr int kFirstGroupLines = 10;       // c0: 7 columns + 3 rows
inline constexpr int kFirstGroupLinesDouble = 9;  // the bent outgoing edge of v1 is omitted
inline constexpr int kLastGroupRows = 2;          // ck
inline constexpr int kLastGroupRowsDouble = 1;    // the two-bend edge into vn is omitted
/// Constant-explicit slack of the half-perimeter bounds:
/// Simple: HP <= 1.5 n + 0.5 x22 - x_short + kSimpleSlack
/// Paired: HP <= 1.5 n + kPairedSlack
inline constexpr int kSimpleSlack = kFirstGroupLines + kLastGroupRows + 3;
inline constexpr int kPairedSlack = kSimpleSlack;

struct DrawOptions {
    PlacementStrategy strategy = PlacementStrategy::Paired;
    bool check_steps = true;  // validate the partial drawing after every placement step
};

struct DrawResult {
    Drawing drawing;
    Graph regular;           // the 4-regularized graph actually drawn
    CanonicalOrder order;
    Orientation o;
    Pairing pairing;         // empty under Simple
    std::vector<PairCase> cases;
    std::vector<PartialDrawing::Step> steps;  // placement ledger
    bool k4 = false;         // fixed-template special case
};

/// End-to-end pipeline: K4 template, else regularize, search a 3-canonical
/// order over (v1, vn) candidates, orient, pair (if Paired) and place.
DrawResult draw_full(const Graph& g, const DrawOptions& opt = {});

Drawing draw(const Graph& g, const DrawOptions& opt = {});

/// Same pipeline with a precomputed order over an already-regular graph;
/// used by targeted tests to pin individual pair cases.
DrawResult draw_with_order(const Graph& regular, const CanonicalOrder& order,
                           const DrawOptions& opt = {});

}  // namespace ortho
