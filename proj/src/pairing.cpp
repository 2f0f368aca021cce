#include "ortho/pairing.hpp"

#include <algorithm>

#include "ortho/error.hpp"

namespace ortho {

namespace {

std::vector<Vertex> predecessors(const Graph& g, const Orientation& o, Vertex v) {
    std::vector<Vertex> preds;
    for (int e : g.incident_edges(v)) {
        Vertex in = o.forward[e] ? g.edges[e].u : g.edges[e].v;
        Vertex out = g.edges[e].other(in);
        if (out == v && o.group_of[in] < o.group_of[v]) preds.push_back(in);
    }
    return preds;
}

Vertex successor_of_31(const Graph& g, const Orientation& o, Vertex z) {
    for (int e : g.incident_edges(z)) {
        Vertex in = o.forward[e] ? g.edges[e].u : g.edges[e].v;
        if (in == z) return g.edges[e].other(z);
    }
    return 0;
}

}  // namespace

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::ShortChainPair: return "1";
        case CaseTag::ThreeOneFeeder: return "2";
        case CaseTag::TwoLongChains: return "3";
        case CaseTag::TwoTwoLeftFree: return "4a";
        case CaseTag::TwoTwoRightFree: return "4b";
        case CaseTag::TwoTwoEnclosed: return "4c";
        case CaseTag::ChainEndNeighbor: return "5a";
        case CaseTag::ChainMiddleNeighbor: return "5b";
        case CaseTag::TwoMiddleNeighbors: return "5c";
        case CaseTag::AdjacentEndPair: return "5d";
        case CaseTag::EndPlusFar: return "5e";
    }
    return "?";
}

Pairing compute_pairing(const Graph& g, const CanonicalOrder& order, const Orientation& o) {
    int k = order.k();
    Pairing p;
    p.partner.assign(k, -1);
    int i = k - 2;  // skip the last group, a 4-0-singleton
    while (i > 1) {
        while (i > 1 && group_kind(order, o, i) == GroupKind::Singleton31) --i;
        if (i <= 1) break;
        int j = i - 1;
        // the scan cannot pass V_2, which is never a 3-1-singleton
        while (group_kind(order, o, j) == GroupKind::Singleton31 &&
               o.group_of[successor_of_31(g, o, order.groups[j].verts[0])] != i) {
            --j;
        }
        p.pairs.push_back({j, i});
        p.partner[j] = i;
        p.partner[i] = j;
        i = j - 1;
    }
    std::reverse(p.pairs.begin(), p.pairs.end());
    for (int t = 0; t < k; ++t)
        if (p.partner[t] == -1) p.unpaired.push_back(t);
    return p;
}

int incoming_column(const Graph& g, const PartialDrawing& pd, Vertex u, Vertex v) {
    for (int e : g.incident_edges(v))
        if (g.edges[e].joins(u, v) && pd.open_end[e])
            return pd.open_end[e]->col;
    throw OrthoError(ErrorKind::PortConflict, "no open edge from " + std::to_string(u) + " to " +
                                                  std::to_string(v));
}

std::vector<Vertex> normalized_chain(const Graph& g, const CanonicalOrder& order,
                                     const Orientation& o, const PartialDrawing& pd,
                                     int group_index) {
    std::vector<Vertex> chain = order.groups[group_index].verts;
    auto end_col = [&](Vertex z) {
        auto preds = predecessors(g, o, z);
        return pd.cols.pos(incoming_column(g, pd, preds.at(0), z));
    };
    if (end_col(chain.front()) > end_col(chain.back())) std::reverse(chain.begin(), chain.end());
    return chain;
}

namespace {

// positions of the reserved columns of incoming edges of the group's vertices,
// excluding predecessors inside group `exclude`
std::vector<int> pred_col_positions(const Graph& g, const CanonicalOrder& order,
                                    const Orientation& o, const PartialDrawing& pd, int group,
                                    int exclude) {
    std::vector<int> cols;
    for (Vertex v : order.groups[group].verts)
        for (Vertex u : predecessors(g, o, v))
            if (o.group_of[u] != exclude) cols.push_back(pd.cols.pos(incoming_column(g, pd, u, v)));
    return cols;
}

PairCase case4(const Graph& g, const CanonicalOrder& order, const Orientation& o,
               const PartialDrawing& pd, int j, int i, bool swapped, GroupKind ki) {
    auto cj = pred_col_positions(g, order, o, pd, j, -1);
    auto ci = pred_col_positions(g, order, o, pd, i, j);
    if (cj.size() != 2 || ci.empty())
        throw OrthoError(ErrorKind::UnclassifiablePair,
                         "predecessor-column count off for pair (" + std::to_string(j) + "," +
                             std::to_string(i) + ")");
    int lo = std::min(*std::min_element(cj.begin(), cj.end()),
                      *std::min_element(ci.begin(), ci.end()));
    int hi = std::max(*std::max_element(cj.begin(), cj.end()),
                      *std::max_element(ci.begin(), ci.end()));
    bool lo_j = std::find(cj.begin(), cj.end(), lo) != cj.end();
    bool hi_j = std::find(cj.begin(), cj.end(), hi) != cj.end();
    if (lo_j) return {CaseTag::TwoTwoLeftFree, j, i, swapped, false};
    if (hi_j) return {CaseTag::TwoTwoRightFree, j, i, swapped, true};
    // 4(c): both outer columns are V_i's, so V_i has two predecessors outside
    // V_j and the groups are non-adjacent
    if (!swapped && ki == GroupKind::Singleton22)
        return {CaseTag::TwoTwoLeftFree, i, j, true, false};  // exchange roles, back to 4(a)
    if (ki == GroupKind::LongChain) return {CaseTag::TwoTwoEnclosed, j, i, swapped, false};
    throw OrthoError(ErrorKind::UnclassifiablePair,
                     "case 4(c) with unexpected V_i kind for pair (" + std::to_string(j) + "," +
                         std::to_string(i) + ")");
}

PairCase case5(const Graph& g, const CanonicalOrder& order, const Orientation& o,
               const PartialDrawing& pd, int j, int i) {
    std::vector<Vertex> chain = normalized_chain(g, order, o, pd, j);
    int l = static_cast<int>(chain.size());
    Vertex z = order.groups[i].verts[0];
    std::vector<int> nbr;  // 1-based chain indices of z's predecessors in V_j
    for (Vertex u : predecessors(g, o, z))
        for (int t = 0; t < l; ++t)
            if (chain[t] == u) nbr.push_back(t + 1);
    std::sort(nbr.begin(), nbr.end());
    if (nbr.size() == 1) {
        int t = nbr[0];
        if (t == 1) return {CaseTag::ChainEndNeighbor, j, i, false, false};
        if (t == l) return {CaseTag::ChainEndNeighbor, j, i, false, true};
        return {CaseTag::ChainMiddleNeighbor, j, i, false, false, -1, t};
    }
    if (nbr.size() == 2) {
        int t1 = nbr[0], t2 = nbr[1];
        if (t1 > 1 && t2 < l) return {CaseTag::TwoMiddleNeighbors, j, i, false, false, t1, t2};
        if (t1 == 1 && t2 == 2) return {CaseTag::AdjacentEndPair, j, i, false, false};
        if (t1 == l - 1 && t2 == l) return {CaseTag::AdjacentEndPair, j, i, false, true};
        if (t1 == 1) return {CaseTag::EndPlusFar, j, i, false, false, -1, t2};
        if (t2 == l) return {CaseTag::EndPlusFar, j, i, false, true, -1, l + 1 - t1};
    }
    throw OrthoError(ErrorKind::UnclassifiablePair,
                     "singleton with " + std::to_string(nbr.size()) + " chain neighbors in pair (" +
                         std::to_string(j) + "," + std::to_string(i) + ")");
}

}  // namespace

PairCase classify_case(std::pair<int, int> pair, const Graph& g, const CanonicalOrder& order,
                       const Orientation& o, const PartialDrawing& pd) {
    auto [j, i] = pair;
    GroupKind kj = group_kind(order, o, j);
    GroupKind ki = group_kind(order, o, i);
    if (ki != GroupKind::Singleton22 && ki != GroupKind::ShortChain && ki != GroupKind::LongChain)
        throw OrthoError(ErrorKind::UnclassifiablePair,
                         "V_i of pair (" + std::to_string(j) + "," + std::to_string(i) +
                             ") is neither 2-2-singleton nor chain");
    // Case 1: one of the groups is a short chain; standard layouts already save
    if (kj == GroupKind::ShortChain || ki == GroupKind::ShortChain)
        return {CaseTag::ShortChainPair, j, i, false, false};
    // Case 2: V_j is a 3-1-singleton; its unique outgoing edge must lead to V_i
    if (kj == GroupKind::Singleton31) {
        Vertex zj = order.groups[j].verts[0];
        if (o.group_of[successor_of_31(g, o, zj)] != i)
            throw OrthoError(ErrorKind::UnclassifiablePair,
                             "paired 3-1-singleton's successor not in V_i for pair (" +
                                 std::to_string(j) + "," + std::to_string(i) + ")");
        return {CaseTag::ThreeOneFeeder, j, i, false, false};
    }
    // Case 3: both long chains
    if (kj == GroupKind::LongChain && ki == GroupKind::LongChain)
        return {CaseTag::TwoLongChains, j, i, false, false};
    // Case 4: V_j is a 2-2-singleton
    if (kj == GroupKind::Singleton22) return case4(g, order, o, pd, j, i, false, ki);
    // Case 5: V_j is a long chain, V_i a 2-2-singleton
    if (kj == GroupKind::LongChain && ki == GroupKind::Singleton22) {
        Vertex z = order.groups[i].verts[0];
        bool adjacent = false;
        for (Vertex u : predecessors(g, o, z))
            if (o.group_of[u] == j) adjacent = true;
        if (!adjacent)  // exchange roles: the 2-2-singleton is drawn first
            return case4(g, order, o, pd, i, j, true, GroupKind::LongChain);
        return case5(g, order, o, pd, j, i);
    }
    throw OrthoError(ErrorKind::UnclassifiablePair,
                     "unexpected V_j kind for pair (" + std::to_string(j) + "," +
                         std::to_string(i) + ")");
}

}  // namespace ortho
