#include "ortho/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace ortho {

namespace {

struct Seg {
    int eid = -1;
    int x1 = 0, y1 = 0, x2 = 0, y2 = 0;  // normalized: x1<=x2, y1<=y2
    bool horiz = false;
    int route_pos = 0;  // index of the segment within its route
};

struct Pt {
    int x = 0, y = 0;
    auto operator<=>(const Pt&) const = default;
};

std::string pt_str(Pt p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

/// Geometry core shared by validate() and check_partial().  Works on any
/// integer coordinate space (final coordinates or handle-order indices).
struct Scene {
    std::vector<Seg> segs;
    std::vector<std::vector<Pt>> routes;      // per edge, may be partial
    std::vector<char> route_terminal_front;   // front point is a vertex terminal
    std::vector<char> route_terminal_back;
    std::map<Pt, Vertex> vertex_points;
    std::vector<std::pair<Vertex, Vertex>> edge_ends;  // u,v per edge id

    ValidationReport report;

    void viol(const std::string& code, const std::string& detail) { report.push_back({code, detail}); }

    bool terminal_at(int eid, Pt p) const {
        const auto& r = routes[eid];
        if (r.empty()) return false;
        if (route_terminal_front[eid] && r.front() == p) return true;
        if (route_terminal_back[eid] && r.back() == p) return true;
        return false;
    }

    // builds segs from routes; also flags non-axis-parallel or degenerate steps
    void build_segments() {
        for (int e = 0; e < static_cast<int>(routes.size()); ++e) {
            const auto& r = routes[e];
            for (size_t t = 0; t + 1 < r.size(); ++t) {
                Pt a = r[t], b = r[t + 1];
                if ((a.x != b.x) == (a.y != b.y)) {
                    viol("RouteNotOrthogonal", "edge " + std::to_string(e) + " step " + pt_str(a) + "->" + pt_str(b));
                    continue;
                }
                Seg s;
                s.eid = e;
                s.horiz = (a.y == b.y);
                s.x1 = std::min(a.x, b.x);
                s.x2 = std::max(a.x, b.x);
                s.y1 = std::min(a.y, b.y);
                s.y2 = std::max(a.y, b.y);
                s.route_pos = static_cast<int>(t);
                segs.push_back(s);
            }
            for (size_t t = 0; t + 2 < r.size(); ++t) {
                bool h1 = r[t].y == r[t + 1].y, h2 = r[t + 1].y == r[t + 2].y;
                if (h1 == h2)
                    viol("RouteNotAlternating", "edge " + std::to_string(e) + " at " + pt_str(r[t + 1]));
            }
        }
    }

    void handle_point(const Seg& a, const Seg& b, Pt p) {
        if (a.eid == b.eid) {
            bool adjacent = std::abs(a.route_pos - b.route_pos) == 1;
            Pt shared = routes[a.eid][std::max(a.route_pos, b.route_pos)];
            if (!(adjacent && p == shared))
                viol("SelfIntersection", "edge " + std::to_string(a.eid) + " at " + pt_str(p));
            return;
        }
        auto vit = vertex_points.find(p);
        if (vit != vertex_points.end()) {
            if (!terminal_at(a.eid, p) || !terminal_at(b.eid, p))
                viol("RouteThroughVertex", "vertex " + std::to_string(vit->second) + " at " + pt_str(p));
            return;
        }
        auto interior = [&](const Seg& s) {
            return s.horiz ? (p.x > s.x1 && p.x < s.x2) : (p.y > s.y1 && p.y < s.y2);
        };
        if (!interior(a) || !interior(b))
            viol("CrossingAtBend",
                 "edges " + std::to_string(a.eid) + "," + std::to_string(b.eid) + " at " + pt_str(p));
        // else: legal crossing
    }

    void check_intersections() {
        // collinear: bucket by supporting line, sweep the intervals
        std::map<std::pair<bool, int>, std::vector<const Seg*>> lines;
        for (const Seg& s : segs)
            lines[{s.horiz, s.horiz ? s.y1 : s.x1}].push_back(&s);
        for (auto& [key, v] : lines) {
            bool horiz = key.first;
            auto lo = [&](const Seg* s) { return horiz ? s->x1 : s->y1; };
            auto hi = [&](const Seg* s) { return horiz ? s->x2 : s->y2; };
            std::sort(v.begin(), v.end(), [&](const Seg* a, const Seg* b) { return lo(a) < lo(b); });
            for (size_t i = 0; i < v.size(); ++i)
                for (size_t j = i + 1; j < v.size() && lo(v[j]) <= hi(v[i]); ++j) {
                    if (lo(v[j]) < hi(v[i])) {
                        viol("OverlapViolation", "edges " + std::to_string(v[i]->eid) + "," +
                                                     std::to_string(v[j]->eid) + " on a shared line");
                    } else {  // touch at a single point
                        Pt p = horiz ? Pt{lo(v[j]), key.second} : Pt{key.second, lo(v[j])};
                        handle_point(*v[i], *v[j], p);
                    }
                }
        }
        // perpendicular crossings
        std::map<int, std::vector<const Seg*>> verts_by_x;
        for (const Seg& s : segs)
            if (!s.horiz) verts_by_x[s.x1].push_back(&s);
        for (const Seg& s : segs) {
            if (!s.horiz) continue;
            auto it = verts_by_x.lower_bound(s.x1);
            for (; it != verts_by_x.end() && it->first <= s.x2; ++it)
                for (const Seg* v : it->second)
                    if (s.y1 >= v->y1 && s.y1 <= v->y2) handle_point(s, *v, {v->x1, s.y1});
        }
    }

    void check_vertices() {
        for (const auto& [p, w] : vertex_points)
            for (const Seg& s : segs) {
                bool on = s.horiz ? (s.y1 == p.y && s.x1 <= p.x && s.x2 >= p.x)
                                  : (s.x1 == p.x && s.y1 <= p.y && s.y2 >= p.y);
                if (on && !terminal_at(s.eid, p))
                    viol("RouteThroughVertex", "vertex " + std::to_string(w) + " at " + pt_str(p));
            }
    }

    void check_ports(const std::vector<char>& open_up) {
        std::map<Vertex, std::set<std::pair<int, int>>> dirs;
        auto add_dir = [&](Pt at, Pt next, int eid) {
            auto vit = vertex_points.find(at);
            if (vit == vertex_points.end()) return;
            int dx = (next.x > at.x) - (next.x < at.x), dy = (next.y > at.y) - (next.y < at.y);
            if (!dirs[vit->second].insert({dx, dy}).second)
                viol("PortConflict", "vertex " + std::to_string(vit->second) + " edge " + std::to_string(eid));
        };
        for (int e = 0; e < static_cast<int>(routes.size()); ++e) {
            const auto& r = routes[e];
            if (r.empty()) continue;
            if (r.size() >= 2) {
                if (route_terminal_front[e]) add_dir(r.front(), r[1], e);
                if (route_terminal_back[e]) add_dir(r.back(), r[r.size() - 2], e);
            }
            if (open_up.empty() ? false : open_up[e]) {
                // unfinished edge continues upward from its anchor
                if (r.size() == 1 && route_terminal_front[e]) add_dir(r.front(), {r.front().x, r.front().y + 1}, e);
            }
        }
    }

    void run(const std::vector<char>& open_up) {
        build_segments();
        check_intersections();
        check_vertices();
        check_ports(open_up);
    }
};

}  // namespace

ValidationReport validate(const Drawing& d, const Graph& g) {
    Scene sc;
    ValidationReport pre;
    if (static_cast<int>(d.edges.size()) != g.m())
        pre.push_back({"EdgeSetMismatch", "drawing has " + std::to_string(d.edges.size()) +
                                              " edges, graph has " + std::to_string(g.m())});
    std::multiset<std::pair<Vertex, Vertex>> want;
    for (const Edge& e : g.edges) want.insert(std::minmax(e.u, e.v));
    for (const auto& er : d.edges) {
        auto key = std::minmax(er.u, er.v);
        auto it = want.find(key);
        if (it == want.end())
            pre.push_back({"EdgeSetMismatch",
                           "edge (" + std::to_string(er.u) + "," + std::to_string(er.v) + ") not in graph"});
        else
            want.erase(it);
    }

    for (Vertex v = 1; v <= d.n; ++v) {
        Pt p{d.vertex[v].first, d.vertex[v].second};
        auto [it, fresh] = sc.vertex_points.insert({p, v});
        if (!fresh)
            pre.push_back({"VertexOverlap", "vertices " + std::to_string(it->second) + "," +
                                                std::to_string(v) + " at " + pt_str(p)});
    }

    sc.routes.resize(d.edges.size());
    sc.route_terminal_front.assign(d.edges.size(), 1);
    sc.route_terminal_back.assign(d.edges.size(), 1);
    for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
        const auto& er = d.edges[e];
        for (auto [x, y] : er.pts) sc.routes[e].push_back({x, y});
        if (sc.routes[e].size() < 2) {
            pre.push_back({"RouteTooShort", "edge " + std::to_string(e)});
            continue;
        }
        Pt pu{d.vertex[er.u].first, d.vertex[er.u].second};
        Pt pv{d.vertex[er.v].first, d.vertex[er.v].second};
        if (!((sc.routes[e].front() == pu && sc.routes[e].back() == pv) ||
              (sc.routes[e].front() == pv && sc.routes[e].back() == pu)))
            pre.push_back({"RouteEndpointMismatch", "edge " + std::to_string(e)});
    }
    sc.run({});
    pre.insert(pre.end(), sc.report.begin(), sc.report.end());
    return pre;
}

GridMetrics metrics(const Drawing& d) {
    GridMetrics m;
    std::set<int> xs, ys;
    auto mark_range = [](std::set<int>& s, int a, int b) {
        for (int t = std::min(a, b); t <= std::max(a, b); ++t) s.insert(t);
    };
    for (Vertex v = 1; v <= d.n; ++v) {
        xs.insert(d.vertex[v].first);
        ys.insert(d.vertex[v].second);
    }
    for (const auto& er : d.edges) {
        for (size_t t = 0; t + 1 < er.pts.size(); ++t) {
            mark_range(xs, er.pts[t].first, er.pts[t + 1].first);
            mark_range(ys, er.pts[t].second, er.pts[t + 1].second);
        }
        if (er.pts.size() >= 2) m.bends += static_cast<int>(er.pts.size()) - 2;
    }
    m.width = static_cast<int>(xs.size());
    m.height = static_cast<int>(ys.size());
    m.half_perimeter = m.width + m.height;
    m.area = static_cast<long long>(m.width) * m.height;
    return m;
}

ValidationReport check_partial(const PartialDrawing& pd) {
    Scene sc;
    ValidationReport pre;
    auto X = [&](int col) { return pd.cols.pos(col); };
    auto Y = [&](int row) { return pd.rows.pos(row); };

    for (int v = 1; v < static_cast<int>(pd.vertex_at.size()); ++v) {
        if (!pd.vertex_at[v]) continue;
        Pt p{X(pd.vertex_at[v]->col), Y(pd.vertex_at[v]->row)};
        auto [it, fresh] = sc.vertex_points.insert({p, v});
        if (!fresh)
            pre.push_back({"VertexOverlap", "vertices " + std::to_string(it->second) + "," +
                                                std::to_string(v) + " at " + pt_str(p)});
    }

    int ne = static_cast<int>(pd.route.size());
    sc.routes.resize(ne);
    sc.route_terminal_front.assign(ne, 0);
    sc.route_terminal_back.assign(ne, 0);
    std::vector<char> open_up(ne, 0);
    for (int e = 0; e < ne; ++e) {
        for (const GridPoint& a : pd.route[e]) sc.routes[e].push_back({X(a.col), Y(a.row)});
        if (pd.route[e].empty()) continue;
        sc.route_terminal_front[e] = 1;  // routes start at the first-placed endpoint
        sc.route_terminal_back[e] = pd.finished[e];
        open_up[e] = pd.open_end[e].has_value();
    }

    // reserved-column discipline
    std::map<int, int> col_owner;
    for (int e = 0; e < ne; ++e) {
        if (!pd.open_end[e]) continue;
        int c = pd.open_end[e]->col;
        int anchor_y = Y(pd.open_end[e]->row);
        auto [it, fresh] = col_owner.insert({c, e});
        if (!fresh)
            pre.push_back({"ColumnConflict",
                           "edges " + std::to_string(it->second) + "," + std::to_string(e) +
                               " share reserved column"});
        int x = X(c);
        for (const auto& [p, v] : sc.vertex_points)
            if (p.x == x && p.y > anchor_y)
                pre.push_back({"ReservedColumnBlocked",
                               "vertex " + std::to_string(v) + " above anchor of edge " + std::to_string(e)});
        for (int f = 0; f < ne; ++f) {
            const auto& r = sc.routes[f];
            for (size_t t = 0; t + 1 < r.size(); ++t) {
                bool vert = r[t].x == r[t + 1].x;
                if (vert && r[t].x == x && std::max(r[t].y, r[t + 1].y) > anchor_y && f != e)
                    pre.push_back({"ReservedColumnBlocked",
                                   "vertical of edge " + std::to_string(f) + " above anchor of edge " +
                                       std::to_string(e)});
                if (!vert && r[t].y > anchor_y && (r[t].x == x || r[t + 1].x == x))
                    pre.push_back({"ReservedColumnBlocked",
                                   "bend of edge " + std::to_string(f) + " above anchor of edge " +
                                       std::to_string(e)});
            }
        }
    }

    sc.run(open_up);
    pre.insert(pre.end(), sc.report.begin(), sc.report.end());
    return pre;
}

}  // namespace ortho
