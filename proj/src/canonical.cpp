#include "ortho/canonical.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace ortho {

namespace {

// simple adjacency: parallel pair collapsed, sorted ascending
std::vector<std::vector<Vertex>> simple_adjacency(const Graph& g) {
    std::vector<std::set<Vertex>> nb(g.n + 1);
    for (const Edge& e : g.edges) {
        nb[e.u].insert(e.v);
        nb[e.v].insert(e.u);
    }
    std::vector<std::vector<Vertex>> adj(g.n + 1);
    for (Vertex v = 1; v <= g.n; ++v) adj[v] = {nb[v].begin(), nb[v].end()};
    return adj;
}

struct BitsetHash {
    size_t operator()(const std::vector<uint64_t>& v) const {
        size_t h = 1469598103934665603ull;
        for (uint64_t w : v) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }
};

class OrderSearch {
public:
    OrderSearch(const Graph& g, Vertex v1, Vertex vn, long node_cap, std::uint64_t perturb)
        : g_(g), v1_(v1), vn_(vn), node_cap_(node_cap), perturb_(perturb), rng_(perturb),
          adj_(simple_adjacency(g)), placed_(g.n + 1, 0), placed_nb_(g.n + 1, 0) {}

    bool run(std::vector<Group>& out) {
        for (Vertex v2 : adj_[v1_]) {
            if (v2 == vn_) continue;
            groups_.push_back({false, {v1_, v2}});
            place(v1_);
            place(v2);
            if (state_ok() && extend()) {
                out = groups_;
                return true;
            }
            unplace(v2);
            unplace(v1_);
            groups_.pop_back();
        }
        return false;
    }

private:
    void place(Vertex z) {
        placed_[z] = 1;
        ++placed_count_;
        for (Vertex w : adj_[z]) ++placed_nb_[w];
    }
    void unplace(Vertex z) {
        placed_[z] = 0;
        --placed_count_;
        for (Vertex w : adj_[z]) --placed_nb_[w];
    }

    int unplaced_nb(Vertex z) const { return static_cast<int>(adj_[z].size()) - placed_nb_[z]; }

    // prune: unplaced subgraph connected (non-separating ear property) and no
    // unplaced vertex other than vn already cut off from future successors
    bool state_ok() const {
        int remaining = g_.n - placed_count_;
        if (remaining == 0) return true;
        Vertex start = 0;
        for (Vertex v = 1; v <= g_.n; ++v) {
            if (placed_[v]) continue;
            if (v != vn_ && unplaced_nb(v) == 0) return false;
            if (!start) start = v;
        }
        std::vector<char> vis(g_.n + 1, 0);
        std::queue<Vertex> q;
        q.push(start);
        vis[start] = 1;
        int cnt = 1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : adj_[v]) {
                if (placed_[w] || vis[w]) continue;
                vis[w] = 1;
                ++cnt;
                q.push(w);
            }
        }
        return cnt == remaining;
    }

    Vertex the_pred(Vertex z) const {
        for (Vertex w : adj_[z])
            if (placed_[w]) return w;
        return 0;
    }

    // Enumerates induced paths extending `path`; returns false if the budget
    // ran out (enumeration incomplete).
    bool chain_paths(std::vector<Vertex>& path, std::vector<std::vector<Vertex>>& out,
                     long& budget) {
        if (--budget < 0) return false;
        bool complete = true;
        Vertex cur = path.back();
        for (Vertex nb : adj_[cur]) {
            if (placed_[nb] || nb == vn_) continue;
            if (std::find(path.begin(), path.end(), nb) != path.end()) continue;
            // induced: nb may touch the path only at cur
            bool chord = false;
            for (size_t t = 0; t + 1 < path.size() && !chord; ++t)
                chord = std::binary_search(adj_[nb].begin(), adj_[nb].end(), path[t]);
            if (chord) continue;
            int pn = placed_nb_[nb];
            if (pn == 1) {
                if (the_pred(nb) != the_pred(path.front())) {
                    path.push_back(nb);
                    out.push_back(path);
                    path.pop_back();
                }
            } else if (pn == 0) {
                path.push_back(nb);
                complete &= chain_paths(path, out, budget);
                path.pop_back();
            }
        }
        return complete;
    }

    std::vector<Group> singleton_candidates() {
        std::vector<Group> cands;
        // nearly saturated vertices first: defers fewer obligations
        for (int want = 3; want >= 2; --want)
            for (Vertex z = 1; z <= g_.n; ++z) {
                if (placed_[z] || z == vn_) continue;
                if (placed_nb_[z] == want && unplaced_nb(z) >= 1) cands.push_back({false, {z}});
            }
        return cands;
    }

    std::vector<Group> chain_candidates(long budget, bool& complete) {
        std::vector<Group> cands;
        std::vector<std::vector<Vertex>> chains;
        bool chains_complete = true;
        long b = budget;  // shared across starting vertices
        for (Vertex z1 = 1; z1 <= g_.n; ++z1) {
            if (placed_[z1] || z1 == vn_ || placed_nb_[z1] != 1) continue;
            std::vector<Vertex> path{z1};
            chains_complete &= chain_paths(path, chains, b);
        }
        complete = chains_complete;
        // normalize so the front endpoint has the lexicographically smaller
        // predecessor, then dedupe chains discovered from both ends; short
        // chains first (cheaper and less likely to disconnect the rest)
        for (auto& c : chains)
            if (the_pred(c.back()) < the_pred(c.front())) std::reverse(c.begin(), c.end());
        std::sort(chains.begin(), chains.end(), [](const auto& x, const auto& y) {
            return x.size() != y.size() ? x.size() < y.size() : x < y;
        });
        chains.erase(std::unique(chains.begin(), chains.end()), chains.end());
        for (auto& c : chains) cands.push_back({true, std::move(c)});
        return cands;
    }

    bool extend() {
        if (placed_count_ == g_.n - 1) {
            groups_.push_back({false, {vn_}});
            return true;
        }
        if (node_cap_ > 0 && ++nodes_ > node_cap_) return false;
        std::vector<uint64_t> key((g_.n + 64) / 64, 0);
        for (Vertex v = 1; v <= g_.n; ++v)
            if (placed_[v]) key[v / 64] |= (1ull << (v % 64));
        if (failed_.count(key)) return false;

        auto attempt = [&](Group& cand) {
            for (Vertex z : cand.verts) place(z);
            bool ok = false;
            if (state_ok()) {
                groups_.push_back(cand);
                if (extend())
                    ok = true;
                else
                    groups_.pop_back();
            }
            if (!ok)
                for (Vertex z : cand.verts) unplace(z);
            return ok;
        };

        // singletons are cheap to find and usually suffice; chains are only
        // enumerated once all singleton moves fail, first under a small budget
        // and then under a large one.  Both budgets are finite: unbounded path
        // enumeration can explode combinatorially on a single bad state.
        auto singletons = singleton_candidates();
        if (perturb_) shuffle(singletons);
        for (Group& cand : singletons)
            if (attempt(cand)) return true;
        bool complete = true;
        std::set<std::vector<Vertex>> tried;
        auto chains = chain_candidates(kChainBudget, complete);
        if (perturb_) shuffle(chains);
        for (Group& cand : chains) {
            tried.insert(cand.verts);
            if (attempt(cand)) return true;
        }
        if (!complete) {
            bool full = true;
            auto more = chain_candidates(kChainBudgetMax, full);
            if (perturb_) shuffle(more);
            for (Group& cand : more)
                if (!tried.count(cand.verts) && attempt(cand)) return true;
        }
        failed_.insert(std::move(key));
        return false;
    }

    // explicit Fisher-Yates: byte-identical candidate orders across platforms
    void shuffle(std::vector<Group>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng_() % i]);
    }

    static constexpr long kChainBudget = 2000;
    static constexpr long kChainBudgetMax = 200000;

    const Graph& g_;
    Vertex v1_, vn_;
    long node_cap_ = -1;
    std::uint64_t perturb_ = 0;
    std::mt19937_64 rng_;
    long nodes_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<char> placed_;
    std::vector<int> placed_nb_;
    int placed_count_ = 0;
    std::vector<Group> groups_;
    std::unordered_set<std::vector<uint64_t>, BitsetHash> failed_;
};

}  // namespace

CanonicalOrder compute_order(const Graph& g, Vertex v1, Vertex vn, long node_cap,
                             std::uint64_t perturb) {
    if (v1 < 1 || v1 > g.n || vn < 1 || vn > g.n || v1 == vn)
        throw OrthoError(ErrorKind::BadVertexId, "v1/vn out of range");
    if (!g.adjacent(v1, vn))
        throw OrthoError(ErrorKind::BadVertexId, "(v1,vn) must be an edge");
    if (!g.is_four_regular())
        throw OrthoError(ErrorKind::NotFourGraph, "compute_order needs a 4-regular graph");
    if (g.double_edge && !g.edges[*g.double_edge].joins(v1, vn))
        throw OrthoError(ErrorKind::BadVertexId, "(v1,vn) must be the double edge");

    OrderSearch search(g, v1, vn, node_cap, perturb);
    CanonicalOrder order;
    if (!search.run(order.groups))
        throw OrthoError(ErrorKind::NoOrderFound,
                         "search exhausted; violates the existence guarantee for 3-connected graphs");
    order.v1 = v1;
    order.v2 = order.groups[0].verts[1];
    order.vn = vn;
    return order;
}

std::vector<OrderViolation> verify_order(const Graph& g, const CanonicalOrder& order) {
    std::vector<OrderViolation> out;
    auto viol = [&](const std::string& clause, int grp, const std::string& detail) {
        out.push_back({clause, grp, detail});
    };

    std::vector<int> group_of(g.n + 1, -1);
    bool partition_ok = true;
    for (int i = 0; i < order.k(); ++i) {
        for (Vertex v : order.groups[i].verts) {
            if (v < 1 || v > g.n) {
                viol("BadVertexId", i, "vertex " + std::to_string(v));
                partition_ok = false;
                continue;
            }
            if (group_of[v] != -1) {
                viol("VertexRepeated", i, "vertex " + std::to_string(v));
                partition_ok = false;
            }
            group_of[v] = i;
        }
    }
    for (Vertex v = 1; v <= g.n; ++v)
        if (group_of[v] == -1) {
            viol("VertexMissing", -1, "vertex " + std::to_string(v));
            partition_ok = false;
        }
    if (order.k() < 2) {
        viol("TooFewGroups", -1, "k=" + std::to_string(order.k()));
        return out;
    }

    auto adj = simple_adjacency(g);
    auto preds = [&](Vertex z, int i) {
        std::vector<Vertex> r;
        for (Vertex w : adj[z])
            if (group_of[w] >= 0 && group_of[w] < i) r.push_back(w);
        return r;
    };
    auto succ_count = [&](Vertex z, int i) {
        int c = 0;
        for (Vertex w : adj[z])
            if (group_of[w] > i) ++c;
        return c;
    };

    const Group& first = order.groups.front();
    if (first.verts.size() != 2)
        viol("FirstGroupSize", 0, "expected {v1,v2}");
    else if (first.verts[0] != order.v1 || first.verts[1] != order.v2)
        viol("FirstGroupVertices", 0, "does not match v1,v2");
    else if (!g.adjacent(order.v1, order.v2))
        viol("FirstGroupNotEdge", 0, "(v1,v2) not an edge");

    const Group& last = order.groups.back();
    if (last.verts.size() != 1 || last.verts[0] != order.vn)
        viol("LastGroupNotVn", order.k() - 1, "expected {vn}");
    else if (!g.adjacent(order.v1, order.vn))
        viol("LastGroupNotAdjacentV1", order.k() - 1, "(v1,vn) not an edge");

    if (!partition_ok) return out;

    for (int i = 1; i + 1 < order.k(); ++i) {
        const Group& grp = order.groups[i];
        const auto& vs = grp.verts;
        if (vs.size() == 1) {
            Vertex z = vs[0];
            if (preds(z, i).size() < 2)
                viol("SingletonTooFewPredecessors", i, "vertex " + std::to_string(z));
            if (succ_count(z, i) < 1)
                viol("SingletonNoSuccessor", i, "vertex " + std::to_string(z));
        } else {
            size_t l = vs.size();
            for (size_t t = 0; t + 1 < l; ++t)
                if (!g.adjacent(vs[t], vs[t + 1]))
                    viol("ChainNotPath", i, "missing edge (" + std::to_string(vs[t]) + "," + std::to_string(vs[t + 1]) + ")");
            for (size_t s = 0; s < l; ++s)
                for (size_t t = s + 2; t < l; ++t)
                    if (g.adjacent(vs[s], vs[t]))
                        viol("ChainNotInduced", i, "chord (" + std::to_string(vs[s]) + "," + std::to_string(vs[t]) + ")");
            auto p1 = preds(vs.front(), i), p2 = preds(vs.back(), i);
            if (p1.size() != 1)
                viol("ChainEndpointPredCount", i, "vertex " + std::to_string(vs.front()));
            if (p2.size() != 1)
                viol("ChainEndpointPredCount", i, "vertex " + std::to_string(vs.back()));
            if (p1.size() == 1 && p2.size() == 1 && p1[0] == p2[0])
                viol("ChainEndpointsSharePredecessor", i, "predecessor " + std::to_string(p1[0]));
            for (size_t t = 1; t + 1 < l; ++t)
                if (!preds(vs[t], i).empty())
                    viol("ChainInteriorHasPredecessor", i, "vertex " + std::to_string(vs[t]));
            for (Vertex z : vs)
                if (succ_count(z, i) < 1)
                    viol("ChainVertexNoSuccessor", i, "vertex " + std::to_string(z));
        }
    }
    return out;
}

Orientation orient(const Graph& g, const CanonicalOrder& order) {
    Orientation o;
    o.indeg.assign(g.n + 1, 0);
    o.outdeg.assign(g.n + 1, 0);
    o.forward.assign(g.m(), 0);
    o.group_of.assign(g.n + 1, -1);
    std::vector<int> pos_in_group(g.n + 1, 0);
    for (int i = 0; i < order.k(); ++i)
        for (size_t t = 0; t < order.groups[i].verts.size(); ++t) {
            o.group_of[order.groups[i].verts[t]] = i;
            pos_in_group[order.groups[i].verts[t]] = static_cast<int>(t);
        }
    for (int e = 0; e < g.m(); ++e) {
        Vertex u = g.edges[e].u, v = g.edges[e].v;
        int gu = o.group_of[u], gv = o.group_of[v];
        bool fwd;
        if (gu != gv)
            fwd = gu < gv;
        else
            fwd = pos_in_group[u] < pos_in_group[v];  // within V_1 or a chain
        o.forward[e] = fwd;
        Vertex from = fwd ? u : v, to = fwd ? v : u;
        ++o.outdeg[from];
        ++o.indeg[to];
    }
    return o;
}

GroupStats stats(const Graph& g, const CanonicalOrder& order, const Orientation& o) {
    GroupStats s;
    s.k = order.k();
    for (Vertex v = 1; v <= g.n; ++v) {
        if (o.indeg[v] + o.outdeg[v] != 4 || o.indeg[v] > 4)
            throw std::logic_error("stats: orientation degrees inconsistent with 4-regularity");
        ++s.x[o.indeg[v]];
    }
    for (int i = 1; i + 1 < order.k(); ++i) {
        const Group& grp = order.groups[i];
        if (grp.verts.size() < 2) continue;
        (grp.verts.size() == 2 ? s.x_short : s.x_long) += 1;
        int c22 = 0, c13 = 0;
        for (Vertex z : grp.verts) {
            if (o.indeg[z] == 2) ++c22;
            if (o.indeg[z] == 1) ++c13;
        }
        if (c22 != 1 || c13 != static_cast<int>(grp.verts.size()) - 1)
            throw std::logic_error("stats: chain degree profile violates Observation 1.3");
    }
    if (s.x[0] != 1 || s.x[4] != 1)
        throw std::logic_error("stats: x04/x40 != 1 violates Observation 1.1");
    if (s.x[1] != s.x[3])
        throw std::logic_error("stats: x13 != x31 violates the degree-sum identity");
    return s;
}

GroupKind group_kind(const CanonicalOrder& order, const Orientation& o, int i) {
    if (i == 0) return GroupKind::First;
    const Group& grp = order.groups[i];
    if (grp.verts.size() == 2 && i > 0 && grp.chain) return GroupKind::ShortChain;
    if (grp.verts.size() >= 3) return GroupKind::LongChain;
    if (grp.verts.size() == 2) return GroupKind::ShortChain;
    switch (o.indeg[grp.verts[0]]) {
        case 2: return GroupKind::Singleton22;
        case 3: return GroupKind::Singleton31;
        case 4: return GroupKind::Singleton40;
        default: throw std::logic_error("group_kind: singleton with indegree < 2");
    }
}

}  // namespace ortho
