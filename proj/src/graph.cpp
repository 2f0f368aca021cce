#include "ortho/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace ortho {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::LoopEdge: return "LoopEdge";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::DegreeExceeded: return "DegreeExceeded";
        case ErrorKind::BadVertexId: return "BadVertexId";
        case ErrorKind::NotThreeConnected: return "NotThreeConnected";
        case ErrorKind::TooSmall: return "TooSmall";
        case ErrorKind::NotFourGraph: return "NotFourGraph";
        case ErrorKind::NoOrderFound: return "NoOrderFound";
        case ErrorKind::UnclassifiablePair: return "UnclassifiablePair";
        case ErrorKind::PortConflict: return "PortConflict";
        case ErrorKind::CaseAssertionFailed: return "CaseAssertionFailed";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::GenerationExhausted: return "GenerationExhausted";
    }
    return "UnknownError";
}

int Graph::degree(Vertex v) const {
    int d = 0;
    for (const Edge& e : edges)
        if (e.u == v || e.v == v) ++d;
    return d;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    for (const Edge& e : edges)
        if (e.joins(a, b)) return true;
    return false;
}

std::optional<int> Graph::edge_between(Vertex a, Vertex b) const {
    for (int i = 0; i < m(); ++i)
        if (edges[i].joins(a, b)) return i;
    return std::nullopt;
}

std::vector<int> Graph::incident_edges(Vertex v) const {
    std::vector<int> out;
    for (int i = 0; i < m(); ++i)
        if (edges[i].u == v || edges[i].v == v) out.push_back(i);
    return out;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::set<Vertex> nb;
    for (const Edge& e : edges) {
        if (e.u == v) nb.insert(e.v);
        if (e.v == v) nb.insert(e.u);
    }
    return {nb.begin(), nb.end()};
}

bool Graph::is_four_regular() const {
    for (Vertex v = 1; v <= n; ++v)
        if (degree(v) != 4) return false;
    return true;
}

bool Graph::has_augmented() const {
    return std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.augmented; });
}

Graph from_edge_list(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    Graph g;
    g.n = n;
    std::vector<int> deg(n + 1, 0);
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto [u, v] : pairs) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw OrthoError(ErrorKind::BadVertexId,
                             "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw OrthoError(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw OrthoError(ErrorKind::DuplicateEdge,
                             "edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ") repeated");
        if (++deg[u] > 4)
            throw OrthoError(ErrorKind::DegreeExceeded, "vertex " + std::to_string(u) + " exceeds degree 4");
        if (++deg[v] > 4)
            throw OrthoError(ErrorKind::DegreeExceeded, "vertex " + std::to_string(v) + " exceeds degree 4");
        g.edges.push_back({u, v});
    }
    return g;
}

namespace {

// connectivity of G minus a set of removed vertices
bool connected_without(const Graph& g, const std::vector<std::vector<Vertex>>& adj, Vertex skip1, Vertex skip2) {
    int remaining = g.n;
    if (skip1) --remaining;
    if (skip2 && skip2 != skip1) --remaining;
    if (remaining <= 1) return true;
    Vertex start = 0;
    for (Vertex v = 1; v <= g.n; ++v)
        if (v != skip1 && v != skip2) { start = v; break; }
    std::vector<char> vis(g.n + 1, 0);
    std::queue<Vertex> q;
    q.push(start);
    vis[start] = 1;
    int count = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : adj[v]) {
            if (w == skip1 || w == skip2 || vis[w]) continue;
            vis[w] = 1;
            ++count;
            q.push(w);
        }
    }
    return count == remaining;
}

std::vector<std::vector<Vertex>> adjacency(const Graph& g) {
    std::vector<std::vector<Vertex>> adj(g.n + 1);
    for (const Edge& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

}  // namespace

bool is_three_connected(const Graph& g) {
    if (g.n <= 3) return false;
    auto adj = adjacency(g);
    if (!connected_without(g, adj, 0, 0)) return false;
    for (Vertex u = 1; u <= g.n; ++u)
        for (Vertex v = u + 1; v <= g.n; ++v)
            if (!connected_without(g, adj, u, v)) return false;
    return true;
}

Graph make_four_regular(const Graph& g) {
    for (Vertex v = 1; v <= g.n; ++v)
        if (g.degree(v) > 4) throw OrthoError(ErrorKind::NotFourGraph, "vertex " + std::to_string(v));
    if (g.n < 5) throw OrthoError(ErrorKind::TooSmall, "n=" + std::to_string(g.n) + ", need n >= 5");
    if (!is_three_connected(g)) throw OrthoError(ErrorKind::NotThreeConnected, "input graph");

    Graph out = g;
    std::vector<int> deg(out.n + 1, 0);
    for (const Edge& e : out.edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    auto deg3 = [&] {
        std::vector<Vertex> r;
        for (Vertex v = 1; v <= out.n; ++v)
            if (deg[v] == 3) r.push_back(v);
        return r;
    };

    while (true) {
        auto low = deg3();
        if (low.size() < 4) break;
        // lexicographically smallest non-adjacent degree-3 pair
        bool added = false;
        for (size_t a = 0; a < low.size() && !added; ++a) {
            for (size_t b = a + 1; b < low.size() && !added; ++b) {
                if (!out.adjacent(low[a], low[b])) {
                    out.edges.push_back({low[a], low[b], true});
                    ++deg[low[a]];
                    ++deg[low[b]];
                    added = true;
                }
            }
        }
        if (!added)
            throw OrthoError(ErrorKind::NotThreeConnected, "no non-adjacent degree-3 pair; unexpected for n >= 5");
    }

    auto low = deg3();
    if (low.size() == 2) {
        bool dup = out.adjacent(low[0], low[1]);
        out.edges.push_back({low[0], low[1], true});
        if (dup) out.double_edge = out.m() - 1;
    }
    return out;
}

Graph strip_augmentation(const Graph& g) {
    Graph out;
    out.n = g.n;
    for (const Edge& e : g.edges)
        if (!e.augmented) out.edges.push_back(e);
    return out;
}

}  // namespace ortho
