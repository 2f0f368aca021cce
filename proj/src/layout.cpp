#include "ortho/layout.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "ortho/error.hpp"
#include "ortho/geometry.hpp"

namespace ortho {

namespace {

struct ChainInfo {
    std::vector<Vertex> seq;      // normalized drawing order
    int row_top = -1, row_det = -1;
    int a = -1, b = -1;           // endpoint predecessor column ids
    std::map<Vertex, int> col;    // vertex -> column id
};

struct ChainMods {
    int detour_row = -1;  // shared detour row (cases 3, 4c)
    int chain_row = -1;   // preallocated chain row (case 5c)
    std::optional<int> reuse_out_col;  // freed column for one endpoint side-out
    // endpoint vertex -> (edge, target column): side-out routed there, kept open
    std::map<Vertex, std::pair<int, int>> side_edge;
    // middle vertex -> edge that takes the bottom port; left unrouted, no detour column
    std::map<Vertex, int> bottom_edge;
    std::set<std::pair<int, int>>* blocked = nullptr;  // adjacent (m,d) pairs on a shared row
    std::pair<int, int> interval = {-1, -1};           // column ids of V_j's row span (case 4c)
};

struct TwoTwoInfo { int row = -1, sit = -1, other = -1, side = -1; };
struct ThreeOneInfo { int left = -1, mid = -1, right = -1; };

class Builder {
public:
    Builder(const Graph& g, const CanonicalOrder& order, const Orientation& o,
            const DrawOptions& opt)
        : g_(g), order_(order), o_(o), opt_(opt) {
        pd_.init(g);
    }

    void run(const Pairing* pairing, std::vector<PairCase>& cases_out);
    Drawing finalize();
    PartialDrawing& partial() { return pd_; }

private:
    const Graph& g_;
    const CanonicalOrder& order_;
    const Orientation& o_;
    DrawOptions opt_;
    PartialDrawing pd_;

    [[noreturn]] void fail(const std::string& msg) const {
        throw OrthoError(ErrorKind::CaseAssertionFailed, msg);
    }
    void require(bool cond, const std::string& msg) const {
        if (!cond) fail(msg);
    }

    int cpos(int col) const { return pd_.cols.pos(col); }
    int new_row() { return pd_.rows.insert_back(); }
    int ins(int col, int sign) {
        return sign > 0 ? pd_.cols.insert_after(col) : pd_.cols.insert_before(col);
    }
    GridPoint at(Vertex z) const { return *pd_.vertex_at[z]; }

    void set_vertex(Vertex z, int col, int row) {
        require(!pd_.vertex_at[z], "vertex placed twice");
        pd_.vertex_at[z] = GridPoint{col, row};
    }
    int edge_id(Vertex u, Vertex v) const {
        for (int e : g_.incident_edges(u))
            if (g_.edges[e].joins(u, v) && !pd_.skipped[e]) return e;
        fail("missing edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    void append(int e, GridPoint p) {
        if (pd_.route[e].empty() || !(pd_.route[e].back() == p)) pd_.route[e].push_back(p);
    }
    void open(int e) {
        pd_.open_end[e] = pd_.route[e].back();
    }
    void close(int e) {
        pd_.finished[e] = 1;
        pd_.open_end[e] = std::nullopt;
    }
    /// Extends a reserved edge upward in its column, bending into z if needed.
    void finish(int e, Vertex z) {
        require(pd_.open_end[e].has_value(), "finishing an unreserved edge");
        GridPoint a = *pd_.open_end[e];
        auto [zc, zr] = at(z);
        append(e, {a.col, zr});
        if (a.col != zc) append(e, {zc, zr});
        close(e);
    }
    void out_up(int e, Vertex z) {
        pd_.route[e] = {at(z)};
        open(e);
    }
    void out_side(int e, Vertex z, int target_col) {
        pd_.route[e] = {at(z)};
        append(e, {target_col, at(z).row});
        open(e);
    }
    void out_detour(int e, Vertex z, int via_row, int target_col) {
        pd_.route[e] = {at(z)};
        append(e, {at(z).col, via_row});
        append(e, {target_col, via_row});
        open(e);
    }
    void path_straight(Vertex u, Vertex v) {
        int e = edge_id(u, v);
        pd_.route[e] = {at(u)};
        append(e, at(v));
        close(e);
    }

    /// Reserved incoming edges of z, sorted left to right by column position.
    std::vector<int> open_incoming(Vertex z) const {
        std::vector<int> in;
        for (int e : g_.incident_edges(z))
            if (pd_.open_end[e]) in.push_back(e);
        std::sort(in.begin(), in.end(),
                  [&](int x, int y) { return cpos(pd_.open_end[x]->col) < cpos(pd_.open_end[y]->col); });
        return in;
    }
    int in_col(int e) const { return pd_.open_end[e]->col; }

    /// Incident edges not yet routed (and not skipped), ascending by edge id.
    std::vector<int> unrouted_edges(Vertex z) const {
        std::vector<int> out;
        for (int e : g_.incident_edges(z))
            if (pd_.route[e].empty() && !pd_.skipped[e]) out.push_back(e);
        return out;
    }

    // placements
    void place_first();
    TwoTwoInfo place_22(Vertex z, bool sit_right, std::optional<int> side_col);
    ThreeOneInfo place_31(Vertex z);
    void place_40(Vertex z);
    ChainInfo place_chain(std::vector<Vertex> verts, const ChainMods& mods);
    void place_standard(int gi);
    void place_pair(const PairCase& pc);
    void place_5a(const PairCase& pc);
    void place_5b(const PairCase& pc);
    void place_5c(const PairCase& pc);
    void place_5d(const PairCase& pc);
    void place_5e(const PairCase& pc);

    int insert_middle_col(int b, const ChainMods& mods);
    void endpoint_outs(Vertex v, int col, int sign, const ChainMods& mods, int a, int b);

    template <class F>
    void step(const std::string& label, bool is_pair, int bound, F f) {
        int r0 = pd_.rows.size(), c0 = pd_.cols.size();
        f();
        PartialDrawing::Step s{label, pd_.rows.size() - r0, pd_.cols.size() - c0, is_pair, bound};
        pd_.steps.push_back(s);
        if (is_pair && s.drows + s.dcols > bound)
            fail(label + ": increment " + std::to_string(s.drows + s.dcols) + " exceeds bound " +
                 std::to_string(bound));
        if (opt_.check_steps) {
            auto rep = check_partial(pd_);
            if (!rep.empty())
                throw OrthoError(ErrorKind::PortConflict,
                                 label + ": " + rep[0].code + " (" + rep[0].detail + ")");
        }
    }
};

void Builder::place_first() {
    Vertex v1 = order_.v1, v2 = order_.v2;
    bool dbl = g_.double_edge.has_value();
    // Fixed template: 7 columns (6 with a double edge) and 3 rows.
    std::vector<int> c(7, -1);
    for (int t = dbl ? 1 : 0; t < 7; ++t) c[t] = pd_.cols.insert_back();
    int r0 = new_row(), r1 = new_row(), r2 = new_row();
    set_vertex(v1, c[2], r1);
    set_vertex(v2, c[3], r2);
    int e12 = edge_id(v1, v2);
    pd_.route[e12] = {GridPoint{c[2], r1}};
    append(e12, {c[2], r2});
    append(e12, {c[3], r2});
    close(e12);
    if (dbl) pd_.skipped[*g_.double_edge] = 1;  // the bent outgoing edge of v1 is omitted
    auto o1 = unrouted_edges(v1);
    require(static_cast<int>(o1.size()) == (dbl ? 2 : 3), "first group: v1 out-degree");
    out_side(o1[0], v1, c[1]);
    out_side(o1[1], v1, c[5]);
    if (!dbl) out_detour(o1[2], v1, r0, c[0]);
    auto o2 = unrouted_edges(v2);
    require(o2.size() == 3, "first group: v2 out-degree");
    out_up(o2[0], v2);
    out_side(o2[1], v2, c[4]);
    out_detour(o2[2], v2, r0, c[6]);
}

TwoTwoInfo Builder::place_22(Vertex z, bool sit_right, std::optional<int> side_col) {
    auto in = open_incoming(z);
    require(in.size() == 2, "2-2-singleton in-degree");
    int qc = in_col(in[sit_right ? 1 : 0]);
    int other = in_col(in[sit_right ? 0 : 1]);
    int R = new_row();
    set_vertex(z, qc, R);
    finish(in[0], z);
    finish(in[1], z);
    auto outs = unrouted_edges(z);
    require(outs.size() == 2, "2-2-singleton out-degree");
    out_up(outs[0], z);
    int w = side_col ? *side_col : ins(qc, sit_right ? +1 : -1);
    out_side(outs[1], z, w);
    return {R, qc, other, w};
}

ThreeOneInfo Builder::place_31(Vertex z) {
    auto in = open_incoming(z);
    require(in.size() == 3, "3-1-singleton in-degree");
    int R = new_row();
    set_vertex(z, in_col(in[1]), R);
    for (int e : in) finish(e, z);
    auto outs = unrouted_edges(z);
    require(outs.size() == 1, "3-1-singleton out-degree");
    out_up(outs[0], z);
    return {in_col(in[0]), in_col(in[1]), in_col(in[2])};
}

void Builder::place_40(Vertex z) {
    auto in = open_incoming(z);
    bool dbl = g_.double_edge.has_value();
    require(in.size() == (dbl ? 3u : 4u), "4-0-singleton in-degree");
    int R = new_row();
    set_vertex(z, in_col(in[1]), R);
    finish(in[0], z);
    finish(in[1], z);
    finish(in[2], z);
    if (!dbl) {
        // the fourth edge enters the top port with two bends
        int R2 = new_row();
        int e = in[3];
        GridPoint a = *pd_.open_end[e];
        append(e, {a.col, R2});
        append(e, {at(z).col, R2});
        append(e, at(z));
        close(e);
    }
}

int Builder::insert_middle_col(int b, const ChainMods& mods) {
    int t = cpos(b);
    auto splits = [&](int idx) {
        if (idx <= 0 || idx >= pd_.cols.size()) return false;
        int L = pd_.cols.id_at(idx - 1), r = pd_.cols.id_at(idx);
        if (mods.blocked && mods.blocked->count({L, r})) return true;
        if (mods.interval.first >= 0) {
            int lo = cpos(mods.interval.first), hi = cpos(mods.interval.second);
            if (idx - 1 >= lo && idx <= hi) return true;
        }
        return false;
    };
    while (t > 0 && splits(t)) --t;
    return t == pd_.cols.size() ? pd_.cols.insert_back() : pd_.cols.insert_before(pd_.cols.id_at(t));
}

void Builder::endpoint_outs(Vertex v, int col, int sign, const ChainMods& mods, int a, int b) {
    auto se = mods.side_edge.find(v);
    if (se != mods.side_edge.end()) {
        out_side(se->second.first, v, se->second.second);  // kept open, finished by the caller
        auto rest = unrouted_edges(v);
        require(rest.size() == 1, "chain endpoint out-degree");
        out_up(rest[0], v);
        return;
    }
    auto outs = unrouted_edges(v);
    require(outs.size() == 2, "chain endpoint out-degree");
    out_up(outs[0], v);
    bool reuse = mods.reuse_out_col &&
                 (sign < 0 ? cpos(*mods.reuse_out_col) < cpos(a) : cpos(*mods.reuse_out_col) > cpos(b));
    out_side(outs[1], v, reuse ? *mods.reuse_out_col : ins(col, sign));
}

ChainInfo Builder::place_chain(std::vector<Vertex> verts, const ChainMods& mods) {
    ChainInfo ci;
    int l = static_cast<int>(verts.size());
    require(l >= 2, "chain length");
    auto pred_edge = [&](Vertex v) {
        auto in = open_incoming(v);
        require(in.size() == 1, "chain endpoint in-degree");
        return in[0];
    };
    int ea = pred_edge(verts.front()), eb = pred_edge(verts.back());
    if (cpos(in_col(ea)) > cpos(in_col(eb))) {
        std::reverse(verts.begin(), verts.end());
        std::swap(ea, eb);
    }
    int a = in_col(ea), b = in_col(eb);
    ci.seq = verts;
    ci.a = a;
    ci.b = b;
    if (l == 2) {
        int R = new_row();
        ci.row_top = R;
        set_vertex(verts[0], a, R);
        set_vertex(verts[1], b, R);
        finish(ea, verts[0]);
        finish(eb, verts[1]);
        path_straight(verts[0], verts[1]);
        ci.col[verts[0]] = a;
        ci.col[verts[1]] = b;
        endpoint_outs(verts[0], a, -1, mods, a, b);
        endpoint_outs(verts[1], b, +1, mods, a, b);
        return ci;
    }
    int rdet = mods.detour_row >= 0 ? mods.detour_row : new_row();
    int rtop = mods.chain_row >= 0 ? mods.chain_row : new_row();
    ci.row_det = rdet;
    ci.row_top = rtop;
    set_vertex(verts[0], a, rtop);
    set_vertex(verts[l - 1], b, rtop);
    ci.col[verts[0]] = a;
    ci.col[verts[l - 1]] = b;
    std::map<Vertex, int> dcol;
    for (int t = 1; t + 1 < l; ++t) {
        int m = insert_middle_col(b, mods);
        set_vertex(verts[t], m, rtop);
        ci.col[verts[t]] = m;
        if (!mods.bottom_edge.count(verts[t])) {
            int d = pd_.cols.insert_after(m);
            dcol[verts[t]] = d;
            if (mods.blocked) mods.blocked->insert({m, d});
        }
    }
    finish(ea, verts[0]);
    finish(eb, verts[l - 1]);
    for (int t = 0; t + 1 < l; ++t) path_straight(verts[t], verts[t + 1]);
    endpoint_outs(verts[0], a, -1, mods, a, b);
    endpoint_outs(verts[l - 1], b, +1, mods, a, b);
    for (int t = 1; t + 1 < l; ++t) {
        Vertex v = verts[t];
        auto be = mods.bottom_edge.find(v);
        auto outs = unrouted_edges(v);
        if (be != mods.bottom_edge.end()) {
            // the bottom-port edge stays unrouted for the caller
            std::erase(outs, be->second);
            require(outs.size() == 1, "chain middle out-degree");
            out_up(outs[0], v);
        } else {
            require(outs.size() == 2, "chain middle out-degree");
            out_up(outs[0], v);
            out_detour(outs[1], v, rdet, dcol[v]);
        }
    }
    return ci;
}

void Builder::place_standard(int gi) {
    const Group& grp = order_.groups[gi];
    switch (group_kind(order_, o_, gi)) {
        case GroupKind::Singleton22: place_22(grp.verts[0], true, std::nullopt); break;
        case GroupKind::Singleton31: place_31(grp.verts[0]); break;
        case GroupKind::Singleton40: place_40(grp.verts[0]); break;
        case GroupKind::ShortChain:
        case GroupKind::LongChain: place_chain(grp.verts, {}); break;
        case GroupKind::First: fail("standard placement of the first group");
    }
}

void Builder::place_pair(const PairCase& pc) {
    GroupKind ki = group_kind(order_, o_, pc.i);
    switch (pc.tag) {
        case CaseTag::ShortChainPair:
            place_standard(pc.j);
            place_standard(pc.i);
            break;
        case CaseTag::ThreeOneFeeder: {
            ThreeOneInfo info = place_31(order_.groups[pc.j].verts[0]);
            if (ki == GroupKind::Singleton22) {
                Vertex z = order_.groups[pc.i].verts[0];
                auto in = open_incoming(z);
                require(in.size() == 2, "case 2: singleton in-degree");
                bool sitr = in_col(in[1]) == info.mid;
                require(sitr || in_col(in[0]) == info.mid, "case 2: feeder column not incoming");
                place_22(z, sitr, sitr ? info.right : info.left);
            } else {
                auto verts = order_.groups[pc.i].verts;
                auto in_front = open_incoming(verts.front()), in_back = open_incoming(verts.back());
                require(in_front.size() == 1 && in_back.size() == 1, "case 2: chain in-degree");
                int ca = in_col(in_front[0]), cb = in_col(in_back[0]);
                require(ca == info.mid || cb == info.mid, "case 2: feeder column not incoming");
                ChainMods m;
                bool feeder_left = cpos(info.mid) == std::min(cpos(ca), cpos(cb));
                m.reuse_out_col = feeder_left ? info.left : info.right;
                place_chain(verts, m);
            }
            break;
        }
        case CaseTag::TwoLongChains: {
            std::set<std::pair<int, int>> blocked;
            ChainMods mj;
            mj.blocked = &blocked;
            ChainInfo cj = place_chain(order_.groups[pc.j].verts, mj);
            ChainMods mi;
            mi.detour_row = cj.row_det;
            mi.blocked = &blocked;
            place_chain(order_.groups[pc.i].verts, mi);
            break;
        }
        case CaseTag::TwoTwoLeftFree:
        case CaseTag::TwoTwoRightFree: {
            bool mirror = pc.tag == CaseTag::TwoTwoRightFree;
            TwoTwoInfo fj = place_22(order_.groups[pc.j].verts[0], !mirror, std::nullopt);
            if (ki == GroupKind::Singleton22) {
                place_22(order_.groups[pc.i].verts[0], mirror, fj.other);
            } else {
                ChainMods m;
                m.reuse_out_col = fj.other;
                place_chain(order_.groups[pc.i].verts, m);
            }
            break;
        }
        case CaseTag::TwoTwoEnclosed: {
            TwoTwoInfo fj = place_22(order_.groups[pc.j].verts[0], true, std::nullopt);
            ChainMods m;
            m.detour_row = fj.row;  // detours re-use the singleton's row
            m.interval = {fj.other, fj.side};
            place_chain(order_.groups[pc.i].verts, m);
            break;
        }
        case CaseTag::ChainEndNeighbor: place_5a(pc); break;
        case CaseTag::ChainMiddleNeighbor: place_5b(pc); break;
        case CaseTag::TwoMiddleNeighbors: place_5c(pc); break;
        case CaseTag::AdjacentEndPair: place_5d(pc); break;
        case CaseTag::EndPlusFar: place_5e(pc); break;
    }
}

void Builder::place_5a(const PairCase& pc) {
    std::vector<Vertex> chain = normalized_chain(g_, order_, o_, pd_, pc.j);
    Vertex z = order_.groups[pc.i].verts[0];
    Vertex end = pc.flip ? chain.back() : chain.front();
    std::vector<Vertex> rest(chain.begin(), chain.end());
    std::erase(rest, end);
    place_chain({end, z}, {});
    place_chain(rest, {});
}

void Builder::place_5b(const PairCase& pc) {
    std::vector<Vertex> chain = normalized_chain(g_, order_, o_, pd_, pc.j);
    Vertex z = order_.groups[pc.i].verts[0];
    Vertex zh = chain[pc.h - 1];
    int rz = new_row();  // below the chain rows, above everything drawn
    int ez = edge_id(zh, z);
    ChainMods m;
    m.bottom_edge[zh] = ez;
    ChainInfo ci = place_chain(chain, m);
    auto in = open_incoming(z);
    require(in.size() == 1, "case 5b: singleton in-degree");
    int c = in_col(in[0]);
    set_vertex(z, c, rz);
    finish(in[0], z);
    int mh = ci.col[zh];
    pd_.route[ez] = {GridPoint{mh, ci.row_top}};
    append(ez, {mh, rz});
    append(ez, {c, rz});
    close(ez);
    auto outs = unrouted_edges(z);
    require(outs.size() == 2, "case 5b: singleton out-degree");
    out_up(outs[0], z);
    out_side(outs[1], z, ins(c, cpos(mh) > cpos(c) ? -1 : +1));
}

void Builder::place_5c(const PairCase& pc) {
    std::vector<Vertex> chain = normalized_chain(g_, order_, o_, pd_, pc.j);
    Vertex z = order_.groups[pc.i].verts[0];
    Vertex zg = chain[pc.g - 1], zh = chain[pc.h - 1];
    int rdet = new_row(), rmid = new_row(), rtop = new_row();
    int eg = edge_id(zg, z), eh = edge_id(zh, z);
    ChainMods m;
    m.detour_row = rdet;
    m.chain_row = rtop;
    m.bottom_edge[zg] = eg;
    m.bottom_edge[zh] = eh;
    ChainInfo ci = place_chain(chain, m);
    int x = pd_.cols.insert_after(ci.col[zg]);
    int y = pd_.cols.insert_after(x);
    set_vertex(z, x, rmid);
    for (auto [e, mc] : {std::pair{eg, ci.col[zg]}, std::pair{eh, ci.col[zh]}}) {
        pd_.route[e] = {GridPoint{mc, rtop}};
        append(e, {mc, rmid});
        append(e, {x, rmid});
        close(e);
    }
    auto outs = unrouted_edges(z);
    require(outs.size() == 2, "case 5c: singleton out-degree");
    out_up(outs[0], z);
    out_detour(outs[1], z, rdet, y);
}

void Builder::place_5d(const PairCase& pc) {
    std::vector<Vertex> seq = normalized_chain(g_, order_, o_, pd_, pc.j);
    if (pc.flip) std::reverse(seq.begin(), seq.end());
    int fwd = pc.flip ? -1 : +1;
    Vertex z = order_.groups[pc.i].verts[0];
    Vertex z1 = seq[0], z2 = seq[1];
    auto in = open_incoming(z1);
    require(in.size() == 1, "case 5d: endpoint in-degree");
    int acol = in_col(in[0]);
    int r1 = new_row();
    set_vertex(z1, acol, r1);
    finish(in[0], z1);
    int x = ins(acol, -fwd), y = ins(acol, fwd);
    int ez1 = edge_id(z1, z), ez2 = edge_id(z2, z), epath = edge_id(z1, z2);
    out_side(ez1, z1, x);
    out_up(epath, z1);
    auto rest1 = unrouted_edges(z1);
    require(rest1.size() == 1, "case 5d: endpoint out-degree");
    out_side(rest1[0], z1, y);
    ChainMods m;
    m.side_edge[z2] = {ez2, x};
    ChainInfo ci = place_chain({seq.begin() + 1, seq.end()}, m);
    set_vertex(z, x, ci.row_top);
    finish(ez1, z);
    finish(ez2, z);
    auto outs = unrouted_edges(z);
    require(outs.size() == 2, "case 5d: singleton out-degree");
    out_up(outs[0], z);
    out_side(outs[1], z, ins(x, -fwd));
}

void Builder::place_5e(const PairCase& pc) {
    std::vector<Vertex> seq = normalized_chain(g_, order_, o_, pd_, pc.j);
    if (pc.flip) std::reverse(seq.begin(), seq.end());
    int fwd = pc.flip ? -1 : +1;
    int l = static_cast<int>(seq.size()), h = pc.h;
    Vertex z = order_.groups[pc.i].verts[0];
    int rdet = new_row(), rlow = new_row(), rtop = new_row();
    auto pred_of = [&](Vertex v) {
        auto in = open_incoming(v);
        require(in.size() == 1, "case 5e: endpoint in-degree");
        return in[0];
    };
    int ea = pred_of(seq[0]), eb = pred_of(seq[l - 1]);
    int A = in_col(ea), B = in_col(eb);
    auto inside_ins = [&] { return fwd > 0 ? pd_.cols.insert_before(B) : pd_.cols.insert_after(B); };

    set_vertex(seq[0], A, rtop);
    finish(ea, seq[0]);
    int x = ins(A, -fwd), w = ins(x, -fwd);
    int ez1 = edge_id(seq[0], z), ezh = edge_id(seq[h - 1], z);
    out_side(ez1, seq[0], x);

    // columns and positions for z_2 .. z_{h-1}; z_h sits below z_{h-1}
    std::map<Vertex, int> mcol, dcol;
    for (int t = 1; t <= h - 3; ++t) {
        int mc = inside_ins();
        set_vertex(seq[t], mc, rtop);
        mcol[seq[t]] = mc;
        dcol[seq[t]] = ins(mc, fwd);
    }
    int c = inside_ins();
    set_vertex(seq[h - 2], c, rtop);
    mcol[seq[h - 2]] = c;
    set_vertex(seq[h - 1], c, rlow);
    int d = ins(c, fwd);  // z_h's downward out column
    int p = -1;           // z_{h-1}'s sideways out column (h < l) or reused B (h = l)
    if (h < l) p = ins(d, fwd);

    if (h == l) {
        finish(eb, seq[l - 1]);  // bends into z_h's far-side port at rlow
    } else if (h == l - 1) {
        set_vertex(seq[l - 1], B, rlow);
        finish(eb, seq[l - 1]);
    } else {
        int m2 = inside_ins();
        set_vertex(seq[h], m2, rtop);
        mcol[seq[h]] = m2;
        dcol[seq[h]] = ins(m2, -fwd);  // left out column q, no detour
        for (int t = h + 1; t + 1 < l; ++t) {
            int mc = inside_ins();
            set_vertex(seq[t], mc, rtop);
            mcol[seq[t]] = mc;
            dcol[seq[t]] = ins(mc, fwd);
        }
        set_vertex(seq[l - 1], B, rtop);
        finish(eb, seq[l - 1]);
    }

    // path edges; the one leaving z_h travels along rlow first
    for (int t = 0; t + 1 < l; ++t) {
        Vertex u = seq[t], v = seq[t + 1];
        if (t == h - 1) {
            int e = edge_id(u, v);
            pd_.route[e] = {at(u)};
            append(e, {at(v).col, rlow});
            append(e, at(v));
            close(e);
        } else {
            path_straight(u, v);
        }
    }

    // z_h: left out to x (kept open), downward out to d
    out_side(ezh, seq[h - 1], x);
    {
        auto outs = unrouted_edges(seq[h - 1]);
        require(outs.size() == 1, "case 5e: z_h out-degree");
        out_detour(outs[0], seq[h - 1], rdet, d);
    }

    // remaining outs
    {
        auto o1 = unrouted_edges(seq[0]);
        require(o1.size() == 1, "case 5e: z_1 out-degree");
        out_up(o1[0], seq[0]);
    }
    for (int t = 1; t <= h - 3; ++t) {
        auto outs = unrouted_edges(seq[t]);
        require(outs.size() == 2, "case 5e: middle out-degree");
        out_up(outs[0], seq[t]);
        out_detour(outs[1], seq[t], rdet, dcol[seq[t]]);
    }
    {   // z_{h-1}: up out plus sideways out
        auto outs = unrouted_edges(seq[h - 2]);
        require(outs.size() == 2, "case 5e: z_{h-1} out-degree");
        out_up(outs[0], seq[h - 2]);
        out_side(outs[1], seq[h - 2], h == l ? B : p);
    }
    if (h == l - 1) {
        auto outs = unrouted_edges(seq[l - 1]);
        require(outs.size() == 2, "case 5e: z_l out-degree");
        out_up(outs[0], seq[l - 1]);
        out_side(outs[1], seq[l - 1], ins(B, fwd));
    } else if (h < l - 1) {
        {   // z_{h+1}: up out plus sideways out into q
            auto outs = unrouted_edges(seq[h]);
            require(outs.size() == 2, "case 5e: z_{h+1} out-degree");
            out_up(outs[0], seq[h]);
            out_side(outs[1], seq[h], dcol[seq[h]]);
        }
        for (int t = h + 1; t + 1 < l; ++t) {
            auto outs = unrouted_edges(seq[t]);
            require(outs.size() == 2, "case 5e: middle out-degree");
            out_up(outs[0], seq[t]);
            out_detour(outs[1], seq[t], rdet, dcol[seq[t]]);
        }
        auto outs = unrouted_edges(seq[l - 1]);
        require(outs.size() == 2, "case 5e: z_l out-degree");
        out_up(outs[0], seq[l - 1]);
        out_side(outs[1], seq[l - 1], ins(B, fwd));
    }

    // z itself
    set_vertex(z, x, rtop);
    finish(ez1, z);
    finish(ezh, z);
    auto outs = unrouted_edges(z);
    require(outs.size() == 2, "case 5e: singleton out-degree");
    out_up(outs[0], z);
    out_side(outs[1], z, w);
}

void Builder::run(const Pairing* pairing, std::vector<PairCase>& cases_out) {
    step("V1", false, 0, [&] { place_first(); });
    int k = order_.k();
    std::vector<char> done(k, 0);
    std::map<int, int> pair_of;  // j -> i
    if (pairing)
        for (auto [j, i] : pairing->pairs) pair_of[j] = i;
    for (int gi = 1; gi + 1 < k; ++gi) {
        if (done[gi]) continue;
        auto it = pair_of.find(gi);
        if (it != pair_of.end()) {
            int i = it->second;
            PairCase pc = classify_case({gi, i}, g_, order_, o_, pd_);
            cases_out.push_back(pc);
            int bound = 2 * static_cast<int>(order_.groups[gi].verts.size() +
                                             order_.groups[i].verts.size()) - 1;
            step("pair V" + std::to_string(gi + 1) + ",V" + std::to_string(i + 1) + " case " +
                     to_string(pc.tag),
                 true, bound, [&] { place_pair(pc); });
            done[i] = 1;
        } else {
            step("V" + std::to_string(gi + 1), false, 0, [&] { place_standard(gi); });
        }
    }
    step("V" + std::to_string(k), false, 0, [&] { place_40(order_.vn); });
}

Drawing Builder::finalize() {
    for (int e = 0; e < g_.m(); ++e)
        require(pd_.finished[e] || pd_.skipped[e], "unfinished edge at finalize");
    std::vector<char> used_c(pd_.cols.size(), 0), used_r(pd_.rows.size(), 0);
    auto mark = [](std::vector<char>& u, int a, int b) {
        for (int t = std::min(a, b); t <= std::max(a, b); ++t) u[t] = 1;
    };
    for (Vertex v = 1; v <= g_.n; ++v) {
        used_c[cpos(at(v).col)] = 1;
        used_r[pd_.rows.pos(at(v).row)] = 1;
    }
    for (int e = 0; e < g_.m(); ++e) {
        if (g_.edges[e].augmented) continue;
        const auto& r = pd_.route[e];
        for (size_t t = 0; t + 1 < r.size(); ++t) {
            mark(used_c, cpos(r[t].col), cpos(r[t + 1].col));
            mark(used_r, pd_.rows.pos(r[t].row), pd_.rows.pos(r[t + 1].row));
        }
    }
    std::vector<int> cx(pd_.cols.size(), 0), ry(pd_.rows.size(), 0);
    int W = 0, H = 0;
    for (size_t t = 0; t < used_c.size(); ++t)
        if (used_c[t]) cx[t] = ++W;
    for (size_t t = 0; t < used_r.size(); ++t)
        if (used_r[t]) ry[t] = ++H;
    Drawing d;
    d.n = g_.n;
    d.vertex.assign(g_.n + 1, {0, 0});
    for (Vertex v = 1; v <= g_.n; ++v)
        d.vertex[v] = {cx[cpos(at(v).col)], ry[pd_.rows.pos(at(v).row)]};
    for (int e = 0; e < g_.m(); ++e) {
        if (g_.edges[e].augmented) continue;
        Drawing::EdgeRoute er;
        er.u = g_.edges[e].u;
        er.v = g_.edges[e].v;
        for (const GridPoint& p : pd_.route[e])
            er.pts.push_back({cx[cpos(p.col)], ry[pd_.rows.pos(p.row)]});
        d.edges.push_back(std::move(er));
    }
    return d;
}

Drawing k4_template(const Graph& g) {
    Drawing d;
    d.n = 4;
    d.vertex = {{0, 0}, {2, 1}, {1, 2}, {3, 2}, {2, 3}};
    std::map<std::pair<Vertex, Vertex>, std::vector<std::pair<int, int>>> routes = {
        {{1, 2}, {{2, 1}, {1, 1}, {1, 2}}}, {{1, 3}, {{2, 1}, {3, 1}, {3, 2}}},
        {{1, 4}, {{2, 1}, {2, 3}}},         {{2, 3}, {{1, 2}, {3, 2}}},
        {{2, 4}, {{1, 2}, {1, 3}, {2, 3}}}, {{3, 4}, {{3, 2}, {3, 3}, {2, 3}}},
    };
    for (const Edge& e : g.edges) {
        std::pair<Vertex, Vertex> key = std::minmax(e.u, e.v);
        d.edges.push_back({e.u, e.v, routes.at(key)});
    }
    return d;
}

}  // namespace

DrawResult draw_with_order(const Graph& regular, const CanonicalOrder& order,
                           const DrawOptions& opt) {
    DrawResult res;
    res.regular = regular;
    res.order = order;
    res.o = orient(regular, order);
    Builder b(regular, order, res.o, opt);
    if (opt.strategy == PlacementStrategy::Paired)
        res.pairing = compute_pairing(regular, order, res.o);
    b.run(opt.strategy == PlacementStrategy::Paired ? &res.pairing : nullptr, res.cases);
    res.drawing = b.finalize();
    res.steps = b.partial().steps;
    if (opt.strategy == PlacementStrategy::Paired) {
        // Pair placements never create more grid lines than the two standard
        // placements they replace, but the final unused-line sweep can still
        // leave the standard layout one line smaller on small instances.  The
        // paired strategy guarantees HP(paired) <= HP(simple) by keeping the
        // smaller of the two layouts; the pairing diagnostics always describe
        // the computed pairing.
        DrawOptions simple_opt = opt;
        simple_opt.strategy = PlacementStrategy::Simple;
        Builder sb(regular, order, res.o, simple_opt);
        std::vector<PairCase> no_cases;
        sb.run(nullptr, no_cases);
        Drawing sd = sb.finalize();
        GridMetrics mp = metrics(res.drawing), ms = metrics(sd);
        if (ms.half_perimeter < mp.half_perimeter ||
            (ms.half_perimeter == mp.half_perimeter && ms.area < mp.area)) {
            res.drawing = std::move(sd);
            res.steps = sb.partial().steps;
        }
    }
    return res;
}

DrawResult draw_full(const Graph& g, const DrawOptions& opt) {
    if (g.n < 4) throw OrthoError(ErrorKind::TooSmall, "need at least 4 vertices");
    if (!is_three_connected(g))
        throw OrthoError(ErrorKind::NotThreeConnected, "input graph is not 3-connected");
    if (g.n == 4) {
        DrawResult res;
        res.regular = g;
        res.k4 = true;
        res.drawing = k4_template(g);
        return res;
    }
    Graph rg = make_four_regular(g);
    std::vector<std::pair<Vertex, Vertex>> candidates;
    if (rg.double_edge) {
        const Edge& e = rg.edges[*rg.double_edge];
        candidates = {{e.u, e.v}, {e.v, e.u}};
    } else {
        for (const Edge& e : rg.edges) {
            candidates.push_back({e.u, e.v});
            candidates.push_back({e.v, e.u});
        }
    }
    // cheap capped pass over all candidates first; pathological instances are
    // retried with a larger cap and perturbed search orders rather than an
    // unbounded search, which can thrash indefinitely on adversarial states
    struct Pass {
        long cap;
        std::uint64_t perturb;
    };
    std::vector<Pass> passes{{5000, 0}};
    for (std::uint64_t p = 1; p <= 12; ++p) passes.push_back({50000, p});
    for (const Pass& pass : passes) {
        for (auto [v1, vn] : candidates) {
            try {
                CanonicalOrder order = compute_order(rg, v1, vn, pass.cap, pass.perturb);
                return draw_with_order(rg, order, opt);
            } catch (const OrthoError& err) {
                if (err.kind() != ErrorKind::NoOrderFound) throw;
            }
        }
    }
    throw OrthoError(ErrorKind::NoOrderFound, "no (v1, vn) pair admits a 3-canonical order");
}

Drawing draw(const Graph& g, const DrawOptions& opt) { return draw_full(g, opt).drawing; }

}  // namespace ortho
