#pragma once

#include <optional>
#include <vector>

#include "ortho/error.hpp"

namespace ortho {

using Vertex = int;  // 1-based vertex ids

struct Edge {
    Vertex u = 0, v = 0;
    bool augmented = false;  // added by 4-regularization, deleted from the final drawing

    Vertex other(Vertex w) const { return w == u ? v : u; }
    bool joins(Vertex a, Vertex b) const { return (u == a && v == b) || (u == b && v == a); }
};

/// Simple undirected graph with max degree 4.  After make_four_regular it may
/// carry one parallel pair; the duplicate is always augmented and its edge id
/// is recorded in double_edge.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;             // edge id = index
    std::optional<int> double_edge;      // id of the single permitted duplicate

    int m() const { return static_cast<int>(edges.size()); }
    int degree(Vertex v) const;
    bool adjacent(Vertex a, Vertex b) const;             // parallel pair counts once
    std::optional<int> edge_between(Vertex a, Vertex b) const;  // first matching id
    std::vector<int> incident_edges(Vertex v) const;     // edge ids, ascending
    std::vector<Vertex> neighbors(Vertex v) const;       // deduplicated, ascending
    bool is_four_regular() const;
    bool has_augmented() const;
};

/// Builds a simple graph; rejects loops, duplicates, degree > 4, bad ids.
Graph from_edge_list(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs);

/// Definitional check: n > 3 and G - {u,v} connected for every vertex pair.
bool is_three_connected(const Graph& g);

/// Lemma-1 regularization: repeatedly joins the lexicographically smallest
/// non-adjacent degree-3 pair, then joins the final two degree-3 vertices even
/// if adjacent (creating the one permitted double edge).  Added edges are
/// flagged augmented.
Graph make_four_regular(const Graph& g);

/// Removes all augmented edges, restoring the pre-regularization graph.
Graph strip_augmentation(const Graph& g);

}  // namespace ortho
