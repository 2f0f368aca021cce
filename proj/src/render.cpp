#include "ortho/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "ortho/error.hpp"

namespace ortho {

using nlohmann::json;

Graph parse_graph(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0, n = -1, m = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    auto bad = [&](const std::string& msg) {
        throw OrthoError(ErrorKind::ParseError, msg + " at line " + std::to_string(lineno));
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m)) {
                std::string tok;
                std::istringstream probe(line);
                if (probe >> tok) bad("expected 'n m' header");
                n = -1;
                continue;
            }
            if (n < 1 || m < 0) bad("invalid 'n m' header");
        } else {
            Vertex u, v;
            if (!(ls >> u >> v)) {
                std::string tok;
                std::istringstream probe(line);
                if (probe >> tok) bad("expected 'u v' edge line");
                continue;
            }
            if (u == v) throw OrthoError(ErrorKind::LoopEdge, "loop edge (" + std::to_string(u) +
                                                                  "," + std::to_string(v) +
                                                                  ") at line " + std::to_string(lineno));
            if (u < 1 || u > n || v < 1 || v > n)
                throw OrthoError(ErrorKind::BadVertexId, "vertex out of range at line " +
                                                             std::to_string(lineno));
            edges.push_back({u, v});
        }
        std::string trail;
        if (ls >> trail) bad("trailing token '" + trail + "'");
    }
    if (n < 0) throw OrthoError(ErrorKind::ParseError, "missing 'n m' header");
    if (static_cast<int>(edges.size()) != m)
        throw OrthoError(ErrorKind::ParseError,
                         "header promises " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));
    return from_edge_list(n, edges);
}

std::string emit_ascii(const Drawing& d) {
    int W = 0, H = 0;
    for (int v = 1; v <= d.n; ++v) {
        W = std::max(W, d.vertex[v].first);
        H = std::max(H, d.vertex[v].second);
    }
    for (const auto& e : d.edges)
        for (auto [x, y] : e.pts) {
            W = std::max(W, x);
            H = std::max(H, y);
        }
    if (W > 500 || H > 500)
        throw OrthoError(ErrorKind::TooLarge, "grid " + std::to_string(W) + "x" +
                                                  std::to_string(H) + " exceeds the 500-line cap");
    int cw = 2 * W - 1, ch = 2 * H - 1;
    std::vector<std::string> grid(ch, std::string(cw, ' '));
    auto put = [&](int hx, int hy, char c) {
        char& cell = grid[2 * (H - 1) - hy][hx];
        if ((cell == '-' && c == '|') || (cell == '|' && c == '-'))
            cell = 'x';
        else if (cell == ' ' || c == '+' || c == 'o' || cell == c)
            cell = (cell == 'o') ? 'o' : c;
    };
    for (const auto& e : d.edges) {
        for (size_t t = 0; t + 1 < e.pts.size(); ++t) {
            auto [x1, y1] = e.pts[t];
            auto [x2, y2] = e.pts[t + 1];
            int hx = 2 * (x1 - 1), hy = 2 * (y1 - 1);
            int tx = 2 * (x2 - 1), ty = 2 * (y2 - 1);
            int dx = (tx > hx) - (tx < hx), dy = (ty > hy) - (ty < hy);
            char c = dx ? '-' : '|';
            while (hx != tx || hy != ty) {
                put(hx, hy, c);
                hx += dx;
                hy += dy;
            }
            put(tx, ty, c);
        }
        for (size_t t = 1; t + 1 < e.pts.size(); ++t)
            put(2 * (e.pts[t].first - 1), 2 * (e.pts[t].second - 1), '+');
    }
    for (int v = 1; v <= d.n; ++v)
        put(2 * (d.vertex[v].first - 1), 2 * (d.vertex[v].second - 1), 'o');
    std::string out;
    for (const auto& row : grid) {
        size_t end = row.find_last_not_of(' ');
        out += (end == std::string::npos) ? "" : row.substr(0, end + 1);
        out += '\n';
    }
    return out;
}

std::string emit_svg(const Drawing& d, const RenderOptions& opts) {
    int W = 0, H = 0;
    for (int v = 1; v <= d.n; ++v) {
        W = std::max(W, d.vertex[v].first);
        H = std::max(H, d.vertex[v].second);
    }
    for (const auto& e : d.edges)
        for (auto [x, y] : e.pts) {
            W = std::max(W, x);
            H = std::max(H, y);
        }
    int cs = std::max(4, opts.cell_size);
    auto px = [&](int x) { return x * cs; };
    auto py = [&](int y) { return (H - y + 1) * cs; };  // row 1 at the bottom
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (W + 1) * cs << "\" height=\""
       << (H + 1) * cs << "\" viewBox=\"0 0 " << (W + 1) * cs << " " << (H + 1) * cs << "\">\n";
    if (opts.show_grid) {
        os << "  <g stroke=\"#ddd\" stroke-width=\"1\">\n";
        for (int x = 1; x <= W; ++x)
            os << "    <line x1=\"" << px(x) << "\" y1=\"" << py(H) << "\" x2=\"" << px(x)
               << "\" y2=\"" << py(1) << "\"/>\n";
        for (int y = 1; y <= H; ++y)
            os << "    <line x1=\"" << px(1) << "\" y1=\"" << py(y) << "\" x2=\"" << px(W)
               << "\" y2=\"" << py(y) << "\"/>\n";
        os << "  </g>\n";
    }
    os << "  <g fill=\"none\" stroke=\"#000\" stroke-width=\"2\">\n";
    for (const auto& e : d.edges) {
        os << "    <path d=\"";
        for (size_t t = 0; t < e.pts.size(); ++t)
            os << (t ? " L " : "M ") << px(e.pts[t].first) << " " << py(e.pts[t].second);
        os << "\"/>\n";
    }
    os << "  </g>\n";
    int s = cs / 3;
    for (int v = 1; v <= d.n; ++v) {
        auto [x, y] = d.vertex[v];
        os << "  <rect x=\"" << px(x) - s / 2 << "\" y=\"" << py(y) - s / 2 << "\" width=\"" << s
           << "\" height=\"" << s << "\" fill=\"#000\"/>\n";
        if (opts.label_vertices)
            os << "  <text x=\"" << px(x) + s << "\" y=\"" << py(y) - s
               << "\" font-size=\"" << cs / 2 << "\" font-family=\"monospace\">" << v
               << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

namespace {

json order_json(const CanonicalOrder& order) {
    json groups = json::array();
    for (const Group& grp : order.groups)
        groups.push_back({{"type", grp.chain ? "chain" : "singleton"}, {"vertices", grp.verts}});
    return groups;
}

}  // namespace

std::string emit_json(const Drawing& d, const GridMetrics& m, const DrawResult* diag) {
    json j;
    j["n"] = d.n;
    j["W"] = m.width;
    j["H"] = m.height;
    j["half_perimeter"] = m.half_perimeter;
    j["area"] = m.area;
    j["bends"] = m.bends;
    j["vertices"] = json::array();
    for (int v = 1; v <= d.n; ++v)
        j["vertices"].push_back({{"id", v}, {"x", d.vertex[v].first}, {"y", d.vertex[v].second}});
    j["edges"] = json::array();
    for (const auto& e : d.edges) {
        json pts = json::array();
        for (auto [x, y] : e.pts) pts.push_back({x, y});
        j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"points", pts}});
    }
    if (diag) {
        json dg;
        dg["order"] = order_json(diag->order);
        dg["pairing"] = json::array();
        for (auto [pj, pi] : diag->pairing.pairs) dg["pairing"].push_back({pj, pi});
        dg["cases"] = json::array();
        for (const PairCase& pc : diag->cases)
            dg["cases"].push_back({{"case", to_string(pc.tag)}, {"j", pc.j}, {"i", pc.i}});
        dg["per_group_increments"] = json::array();
        for (const auto& s : diag->steps)
            dg["per_group_increments"].push_back({{"label", s.label},
                                                  {"rows", s.drows},
                                                  {"cols", s.dcols},
                                                  {"is_pair", s.is_pair},
                                                  {"bound", s.pair_bound}});
        j["diagnostics"] = dg;
    }
    return j.dump(2) + "\n";
}

std::string order_to_json(const CanonicalOrder& order) { return order_json(order).dump(2) + "\n"; }

CanonicalOrder order_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw OrthoError(ErrorKind::ParseError, std::string("order file: ") + e.what());
    }
    if (!j.is_array()) throw OrthoError(ErrorKind::ParseError, "order file: expected an array");
    CanonicalOrder order;
    for (const json& grp : j) {
        if (!grp.is_object() || !grp.contains("type") || !grp.contains("vertices"))
            throw OrthoError(ErrorKind::ParseError, "order file: bad group object");
        Group g;
        g.chain = grp["type"] == "chain";
        for (const json& v : grp["vertices"]) g.verts.push_back(v.get<Vertex>());
        order.groups.push_back(std::move(g));
    }
    if (!order.groups.empty()) {
        const auto& first = order.groups.front().verts;
        if (!first.empty()) order.v1 = first[0];
        if (first.size() > 1) order.v2 = first[1];
        const auto& last = order.groups.back().verts;
        if (!last.empty()) order.vn = last[0];
    }
    return order;
}

}  // namespace ortho
