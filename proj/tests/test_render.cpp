#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "ortho/geometry.hpp"
#include "ortho/layout.hpp"
#include "ortho/render.hpp"

using namespace ortho;
using namespace ortho::testing;

namespace {

int count_sub(const std::string& hay, const std::string& needle) {
    int c = 0;
    for (size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++c;
    return c;
}

}  // namespace

TEST_CASE("parse_graph reads the edge-list format with comments") {
    std::string text =
        "# triangular prism\n"
        "6 9\n"
        "1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n"
        "1 4  # side\n2 5\n3 6\n";
    Graph g = parse_graph(text);
    CHECK(g.n == 6);
    CHECK(g.m() == 9);
    CHECK(g.adjacent(1, 4));
}

TEST_CASE("parse_graph errors carry line numbers and the right kinds") {
    auto expect = [](const std::string& text, ErrorKind k, const std::string& frag) {
        try {
            (void)parse_graph(text);
            FAIL("expected OrthoError on: ", text);
        } catch (const OrthoError& e) {
            CHECK(e.kind() == k);
            CHECK_MESSAGE(std::string(e.what()).find(frag) != std::string::npos, e.what());
        }
    };
    expect("", ErrorKind::ParseError, "missing");
    expect("oops\n", ErrorKind::ParseError, "line 1");
    expect("2 1\n1 1\n", ErrorKind::LoopEdge, "line 2");
    expect("2 1\n1 5\n", ErrorKind::BadVertexId, "line 2");
    expect("2 2\n1 2\n", ErrorKind::ParseError, "promises 2");
    expect("2 1\n1 2 3\n", ErrorKind::ParseError, "trailing");
}

TEST_CASE("emit_ascii draws vertices, bends and crossings") {
    // vertical 1-2 crossed by the bent edge 3-4
    Drawing d;
    d.n = 4;
    d.vertex = {{0, 0}, {2, 1}, {2, 3}, {1, 2}, {3, 3}};
    d.edges = {{1, 2, {{2, 1}, {2, 3}}}, {3, 4, {{1, 2}, {3, 2}, {3, 3}}}};
    std::string art = emit_ascii(d);
    CHECK(count_sub(art, "o") == 4);
    CHECK(count_sub(art, "x") == 1);  // (2,2) crossing
    CHECK(count_sub(art, "+") == 1);  // bend at (3,2)
    // top row first: vertex 2 at (2,3) and vertex 4 at (3,3)
    CHECK(art.substr(0, art.find('\n')) == "  o o");
}

TEST_CASE("emit_ascii rejects grids beyond the 500-line cap") {
    Drawing d;
    d.n = 2;
    d.vertex = {{0, 0}, {1, 1}, {501, 1}};
    d.edges = {{1, 2, {{1, 1}, {501, 1}}}};
    CHECK_THROWS_AS((void)emit_ascii(d), OrthoError);
}

TEST_CASE("emit_svg contains one rect per vertex and one path per edge") {
    DrawResult r = draw_full(k5());
    RenderOptions opts;
    std::string svg = emit_svg(r.drawing, opts);
    CHECK(count_sub(svg, "<rect") == 5);
    CHECK(count_sub(svg, "<path") == 10);
    CHECK(count_sub(svg, "<text") == 5);
    opts.label_vertices = false;
    CHECK(count_sub(emit_svg(r.drawing, opts), "<text") == 0);
    opts.show_grid = true;
    CHECK(count_sub(emit_svg(r.drawing, opts), "<line") > 0);
    // byte determinism
    CHECK(emit_svg(r.drawing) == emit_svg(r.drawing));
}

TEST_CASE("emit_json agrees with metrics and is deterministic") {
    DrawResult r = draw_full(octahedron());
    GridMetrics m = metrics(r.drawing);
    std::string js = emit_json(r.drawing, m, &r);
    CHECK(js == emit_json(r.drawing, m, &r));
    CHECK(js.find("\"n\": 6") != std::string::npos);
    CHECK(js.find("\"half_perimeter\": " + std::to_string(m.half_perimeter)) != std::string::npos);
    CHECK(js.find("\"area\": " + std::to_string(m.area)) != std::string::npos);
    CHECK(js.find("\"diagnostics\"") != std::string::npos);
    CHECK(js.find("\"per_group_increments\"") != std::string::npos);
    CHECK(count_sub(js, "\"id\"") == 6);
    CHECK(count_sub(js, "\"points\"") == 12);  // octahedron needs no augmentation
}

TEST_CASE("order JSON round-trips") {
    Graph g = k5();
    CanonicalOrder co = compute_order(g, 1, 5);
    std::string js = order_to_json(co);
    CanonicalOrder back = order_from_json(js);
    REQUIRE(back.k() == co.k());
    for (int t = 0; t < co.k(); ++t) {
        CHECK(back.groups[t].chain == co.groups[t].chain);
        CHECK(back.groups[t].verts == co.groups[t].verts);
    }
    CHECK(back.v1 == co.v1);
    CHECK(back.v2 == co.v2);
    CHECK(back.vn == co.vn);
    CHECK(verify_order(g, back).empty());

    CHECK_THROWS_AS((void)order_from_json("{"), OrthoError);
    CHECK_THROWS_AS((void)order_from_json("{}"), OrthoError);
    CHECK_THROWS_AS((void)order_from_json("[{\"type\":\"chain\"}]"), OrthoError);
}
