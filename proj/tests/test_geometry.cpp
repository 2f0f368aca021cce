#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "ortho/geometry.hpp"

using namespace ortho;
using namespace ortho::testing;

namespace {

bool has_code(const ValidationReport& r, const std::string& code) {
    for (const auto& v : r)
        if (v.code == code) return true;
    return false;
}

Drawing two_vertex(std::pair<int, int> a, std::pair<int, int> b,
                   std::vector<std::pair<int, int>> pts) {
    Drawing d;
    d.n = 2;
    d.vertex = {{0, 0}, a, b};
    d.edges = {{1, 2, std::move(pts)}};
    return d;
}

const Graph g2 = from_edge_list(2, {{1, 2}});

}  // namespace

TEST_CASE("a straight edge validates and has the golden metrics") {
    Drawing d = two_vertex({1, 1}, {3, 1}, {{1, 1}, {3, 1}});
    CHECK(validate(d, g2).empty());
    GridMetrics m = metrics(d);
    CHECK(m.width == 3);
    CHECK(m.height == 1);
    CHECK(m.half_perimeter == 4);
    CHECK(m.area == 3);
    CHECK(m.bends == 0);
}

TEST_CASE("a one-bend edge validates; the bend is counted") {
    Drawing d = two_vertex({1, 1}, {2, 2}, {{1, 1}, {2, 1}, {2, 2}});
    CHECK(validate(d, g2).empty());
    GridMetrics m = metrics(d);
    CHECK(m.width == 2);
    CHECK(m.height == 2);
    CHECK(m.bends == 1);
}

TEST_CASE("a single interior crossing of two edges is legal") {
    Drawing d;
    d.n = 4;
    d.vertex = {{0, 0}, {1, 2}, {3, 2}, {2, 1}, {2, 3}};
    d.edges = {{1, 2, {{1, 2}, {3, 2}}}, {3, 4, {{2, 1}, {2, 3}}}};
    Graph g = from_edge_list(4, {{1, 2}, {3, 4}});
    CHECK(validate(d, g).empty());
}

TEST_CASE("each violation code fires on its handcrafted counterexample") {
    SUBCASE("VertexOverlap") {
        Drawing d = two_vertex({1, 1}, {1, 1}, {{1, 1}, {1, 1}});
        CHECK(has_code(validate(d, g2), "VertexOverlap"));
    }
    SUBCASE("RouteTooShort") {
        Drawing d = two_vertex({1, 1}, {3, 1}, {{1, 1}});
        CHECK(has_code(validate(d, g2), "RouteTooShort"));
    }
    SUBCASE("RouteEndpointMismatch") {
        Drawing d = two_vertex({1, 1}, {3, 1}, {{1, 1}, {2, 1}});
        CHECK(has_code(validate(d, g2), "RouteEndpointMismatch"));
    }
    SUBCASE("RouteNotOrthogonal") {
        Drawing d = two_vertex({1, 1}, {2, 2}, {{1, 1}, {2, 2}});
        CHECK(has_code(validate(d, g2), "RouteNotOrthogonal"));
    }
    SUBCASE("RouteNotAlternating") {
        Drawing d = two_vertex({1, 1}, {3, 1}, {{1, 1}, {2, 1}, {3, 1}});
        CHECK(has_code(validate(d, g2), "RouteNotAlternating"));
    }
    SUBCASE("OverlapViolation") {
        Drawing d;
        d.n = 4;
        d.vertex = {{0, 0}, {1, 1}, {4, 1}, {2, 1}, {3, 1}};
        d.edges = {{1, 2, {{1, 1}, {4, 1}}}, {3, 4, {{2, 1}, {3, 1}}}};
        Graph g = from_edge_list(4, {{1, 2}, {3, 4}});
        CHECK(has_code(validate(d, g), "OverlapViolation"));
    }
    SUBCASE("RouteThroughVertex") {
        Drawing d;
        d.n = 3;
        d.vertex = {{0, 0}, {1, 1}, {3, 1}, {2, 1}};
        d.edges = {{1, 2, {{1, 1}, {3, 1}}}};
        Graph g = from_edge_list(3, {{1, 2}});
        CHECK(has_code(validate(d, g), "RouteThroughVertex"));
    }
    SUBCASE("CrossingAtBend") {
        // edge 1 runs straight through (2,2); edge 2 bends there
        Drawing d;
        d.n = 4;
        d.vertex = {{0, 0}, {2, 1}, {2, 3}, {4, 2}, {3, 4}};
        d.edges = {{1, 2, {{2, 1}, {2, 3}}}, {3, 4, {{4, 2}, {2, 2}, {2, 4}, {3, 4}}}};
        Graph g = from_edge_list(4, {{1, 2}, {3, 4}});
        CHECK(has_code(validate(d, g), "CrossingAtBend"));
    }
    SUBCASE("SelfIntersection") {
        Drawing d = two_vertex({1, 1}, {2, 0},
                               {{1, 1}, {3, 1}, {3, 3}, {2, 3}, {2, 0}});
        CHECK(has_code(validate(d, g2), "SelfIntersection"));
    }
    SUBCASE("PortConflict") {
        Drawing d;
        d.n = 3;
        d.vertex = {{0, 0}, {1, 1}, {3, 1}, {2, 2}};
        d.edges = {{1, 2, {{1, 1}, {3, 1}}}, {1, 3, {{1, 1}, {2, 1}, {2, 2}}}};
        Graph g = from_edge_list(3, {{1, 2}, {1, 3}});
        CHECK(has_code(validate(d, g), "PortConflict"));
    }
    SUBCASE("EdgeSetMismatch") {
        Drawing d = two_vertex({1, 1}, {3, 1}, {{1, 1}, {3, 1}});
        Graph g = from_edge_list(3, {{1, 2}, {2, 3}});
        CHECK(has_code(validate(d, g), "EdgeSetMismatch"));
    }
}

TEST_CASE("check_partial enforces the reserved-column discipline") {
    Graph g = from_edge_list(3, {{1, 2}, {1, 3}});
    PartialDrawing pd;
    pd.init(g);
    int c0 = pd.cols.insert_back(), c1 = pd.cols.insert_back(), c2 = pd.cols.insert_back();
    int r0 = pd.rows.insert_back(), r1 = pd.rows.insert_back();
    (void)c2;
    pd.vertex_at[1] = GridPoint{c0, r0};
    pd.route[0] = {{c0, r0}, {c1, r0}};
    pd.open_end[0] = GridPoint{c1, r0};

    SUBCASE("a well-formed partial passes") {
        pd.route[1] = {{c0, r0}};
        pd.open_end[1] = GridPoint{c0, r0};
        CHECK(check_partial(pd).empty());
    }
    SUBCASE("two edges reserving one column is a ColumnConflict") {
        pd.open_end[1] = GridPoint{c1, r0};
        CHECK(has_code(check_partial(pd), "ColumnConflict"));
    }
    SUBCASE("a vertex above the anchor blocks the reserved column") {
        pd.vertex_at[2] = GridPoint{c1, r1};
        CHECK(has_code(check_partial(pd), "ReservedColumnBlocked"));
    }
}
