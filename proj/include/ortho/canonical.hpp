#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ortho/graph.hpp"

namespace ortho {

struct Group {
    bool chain = false;            // false: singleton (verts.size()==1)
    std::vector<Vertex> verts;     // chain: stored in path order
};

/// Partition V = V_1 .. V_k into singletons and chains: V_1 = {v1,v2} with
/// (v1,v2) an edge, V_k = {vn} with (v1,vn) an edge; intermediate singletons
/// have >=2 predecessors and >=1 successor; chains are induced paths whose
/// endpoints have exactly one (distinct) predecessor each, interiors none,
/// and every chain vertex has a successor.
struct CanonicalOrder {
    std::vector<Group> groups;     // groups[0] = V_1
    Vertex v1 = 0, v2 = 0, vn = 0;

    int k() const { return static_cast<int>(groups.size()); }
};

/// Edge orientation from lower-indexed groups to higher; within a chain along
/// the stored path order; (v1,v2) oriented v1 -> v2.  A double edge counts
/// twice for v1's outdegree and vn's indegree.
struct Orientation {
    std::vector<int> indeg, outdeg;     // index by vertex id
    std::vector<char> forward;          // per edge id: oriented edges[i].u -> .v?
    std::vector<int> group_of;          // vertex -> group index (0-based)
};

struct GroupStats {
    int x[5] = {0, 0, 0, 0, 0};         // x[j] = #vertices with indeg j (outdeg 4-j)
    int x_short = 0, x_long = 0;
    int k = 0;
};

struct OrderViolation {
    std::string clause;   // e.g. "ChainInteriorHasPredecessor"
    int group = -1;       // 0-based index, -1 for global clauses
    std::string detail;
};

/// Backtracking construction of a 3-canonical order with (v1, vn) fixed.
/// Deterministic: nearly saturated singletons first, then lexicographic.
/// node_cap > 0 bounds the number of search nodes (NoOrderFound when hit);
/// perturb != 0 reorders candidates with a seeded shuffle so that callers can
/// escape pathological deterministic search orders by retrying.
CanonicalOrder compute_order(const Graph& g, Vertex v1, Vertex vn, long node_cap = -1,
                             std::uint64_t perturb = 0);

/// Empty iff every Definition-1 clause holds.
std::vector<OrderViolation> verify_order(const Graph& g, const CanonicalOrder& order);

Orientation orient(const Graph& g, const CanonicalOrder& order);

GroupStats stats(const Graph& g, const CanonicalOrder& order, const Orientation& o);

enum class GroupKind { First, Singleton22, Singleton31, Singleton40, ShortChain, LongChain };

GroupKind group_kind(const CanonicalOrder& order, const Orientation& o, int group_index);

}  // namespace ortho
