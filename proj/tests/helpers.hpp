#pragma once

#include <utility>
#include <vector>

#include "ortho/graph.hpp"

namespace ortho::testing {

inline Graph k5() {
    std::vector<std::pair<Vertex, Vertex>> el;
    for (Vertex u = 1; u <= 5; ++u)
        for (Vertex v = u + 1; v <= 5; ++v) el.push_back({u, v});
    return from_edge_list(5, el);
}

inline Graph k4() {
    return from_edge_list(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

inline Graph octahedron() {
    return from_edge_list(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {5, 2},
                              {6, 2}, {6, 3}, {6, 4}, {6, 5}});
}

/// Triangular prism: 3-regular, 3-connected.
inline Graph prism() {
    return from_edge_list(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {2, 5},
                              {3, 6}});
}

/// Circulant C_n(1,2): 4-regular and 3-connected for n >= 5.
inline Graph circulant(int n) {
    std::vector<std::pair<Vertex, Vertex>> el;
    for (Vertex v = 1; v <= n; ++v) {
        el.push_back({v, v % n + 1});
        el.push_back({v, (v + 1) % n + 1});
    }
    return from_edge_list(n, el);
}

/// Hand-built 4-regular 3-connected instance on 13 vertices admitting the
/// hand-built order fig1_order(): one long chain, one short chain, one
/// 2-2-singleton and four 3-1-singletons between V_1 and V_k.
inline Graph fig1_graph() {
    return from_edge_list(
        13, {{1, 2},  {1, 3},  {1, 6},  {1, 13}, {2, 5},  {2, 7},  {2, 8},   {3, 4},   {3, 8},
             {3, 9},  {4, 5},  {4, 9},  {4, 10}, {5, 10}, {5, 11}, {6, 7},   {6, 9},   {6, 11},
             {7, 10}, {7, 12}, {8, 11}, {8, 12}, {9, 12}, {10, 13}, {11, 13}, {12, 13}});
}

}  // namespace ortho::testing
