#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ortho/canonical.hpp"
#include "ortho/drawing.hpp"

namespace ortho {

/// Backward-scan pairing of groups.  Every pair (j, i) has j < i, V_i a
/// 2-2-singleton or chain, and all predecessors of V_i in V_j or earlier.
struct Pairing {
    std::vector<std::pair<int, int>> pairs;  // 0-based group indices (j, i)
    std::vector<int> unpaired;               // 0-based group indices
    std::vector<int> partner;                // group -> partner index, -1 if unpaired
};

Pairing compute_pairing(const Graph& g, const CanonicalOrder& order, const Orientation& o);

enum class CaseTag {
    ShortChainPair,      // 1:  one of the two groups is a short chain
    ThreeOneFeeder,      // 2:  V_j is a 3-1-singleton feeding V_i
    TwoLongChains,       // 3:  both long chains sharing a detour row
    TwoTwoLeftFree,      // 4a: 2-2-singleton V_j frees its leftmost column
    TwoTwoRightFree,     // 4b: mirror of 4a
    TwoTwoEnclosed,      // 4c: V_j's columns between V_i's; chain reuses V_j's row
    ChainEndNeighbor,    // 5a: singleton adjacent to one chain endpoint
    ChainMiddleNeighbor, // 5b: singleton adjacent to one chain middle vertex
    TwoMiddleNeighbors,  // 5c: singleton adjacent to two middle vertices
    AdjacentEndPair,     // 5d: singleton adjacent to an endpoint and its neighbor
    EndPlusFar,          // 5e: singleton adjacent to z_1 and z_h, h > 2 (h = l allowed)
};

std::string to_string(CaseTag tag);

/// Classification of one pair.  j/i are the roles after any swap: V_j is drawn
/// first.  For flipped 5-family cases the chain indices g/h refer to the chain
/// re-indexed from the other end (z'_t = z_{l+1-t}); the layout engine mirrors
/// the construction left-right when flip is set.
struct PairCase {
    CaseTag tag = CaseTag::ShortChainPair;
    int j = -1, i = -1;    // 0-based group indices, j drawn first
    bool swapped = false;  // roles exchanged relative to the scan's (j, i)
    bool flip = false;     // mirrored construction (4b; right-end 5a/5d/5e)
    int g = -1, h = -1;    // 1-based chain indices for 5b/5c/5e
};

/// First-matching case in the order 1, 2, 3, 4(a-c), 5(a-e), with role swap
/// for non-adjacent (2-2, chain) pairs.  Requires groups before j drawn (the
/// 4/5 sub-cases compare predecessor-column positions in pd).
/// Throws OrthoError(UnclassifiablePair) if no case matches.
PairCase classify_case(std::pair<int, int> pair, const Graph& g, const CanonicalOrder& order,
                       const Orientation& o, const PartialDrawing& pd);

/// Chain in drawing order: reversed when z_1's predecessor column lies right
/// of z_l's in pd.
std::vector<Vertex> normalized_chain(const Graph& g, const CanonicalOrder& order,
                                     const Orientation& o, const PartialDrawing& pd,
                                     int group_index);

/// Reserved column of the unfinished edge entering v from predecessor u.
int incoming_column(const Graph& g, const PartialDrawing& pd, Vertex u, Vertex v);

}  // namespace ortho
