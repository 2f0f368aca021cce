#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "ortho/bench.hpp"
#include "ortho/canonical.hpp"

using namespace ortho;
using namespace ortho::testing;

namespace {

CanonicalOrder fig1_order() {
    CanonicalOrder co;
    co.v1 = 1;
    co.v2 = 2;
    co.vn = 13;
    co.groups = {
        {false, {1, 2}},       // V_1
        {true, {3, 4, 5}},     // long chain
        {true, {6, 7}},        // short chain
        {false, {8}},          // 2-2-singleton
        {false, {9}},  {false, {10}}, {false, {11}}, {false, {12}},  // 3-1-singletons
        {false, {13}},         // V_k
    };
    return co;
}

int count_chains(const CanonicalOrder& co, bool long_only) {
    int c = 0;
    for (const Group& gr : co.groups)
        if (gr.chain && (long_only ? gr.verts.size() >= 3 : gr.verts.size() == 2)) ++c;
    return c;
}

}  // namespace

TEST_CASE("K5 order with v1=1, vn=5 is the golden singleton sequence") {
    Graph g = k5();
    CanonicalOrder co = compute_order(g, 1, 5);
    CHECK(verify_order(g, co).empty());
    REQUIRE(co.k() == 4);
    CHECK(co.groups[0].verts == std::vector<Vertex>{1, 2});
    CHECK(co.groups[1].verts == std::vector<Vertex>{3});
    CHECK(co.groups[2].verts == std::vector<Vertex>{4});
    CHECK(co.groups[3].verts == std::vector<Vertex>{5});
    for (const Group& gr : co.groups) CHECK(!gr.chain);

    Orientation o = orient(g, co);
    // Degree classes (indeg, outdeg) along the order: (0,4),(1,3),(2,2),(3,1),(4,0).
    CHECK(o.indeg[1] == 0);
    CHECK(o.indeg[2] == 1);
    CHECK(o.indeg[3] == 2);
    CHECK(o.indeg[4] == 3);
    CHECK(o.indeg[5] == 4);
    CHECK(group_kind(co, o, 1) == GroupKind::Singleton22);
    CHECK(group_kind(co, o, 2) == GroupKind::Singleton31);
    CHECK(group_kind(co, o, 3) == GroupKind::Singleton40);
}

TEST_CASE("computed orders on classic graphs pass verify_order") {
    for (const Graph& g : {k5(), octahedron(), circulant(7), circulant(10), circulant(13)}) {
        bool found = false;
        for (const Edge& e : g.edges) {
            try {
                CanonicalOrder co = compute_order(g, e.u, e.v);
                CHECK(verify_order(g, co).empty());
                found = true;
                break;
            } catch (const OrthoError&) {
            }
        }
        CHECK(found);
    }
}

TEST_CASE("hand-built 13-vertex order satisfies every Definition-1 clause") {
    Graph g = fig1_graph();
    CHECK(g.is_four_regular());
    CanonicalOrder co = fig1_order();
    auto viol = verify_order(g, co);
    for (const auto& v : viol) MESSAGE(v.clause, " @", v.group, " ", v.detail);
    CHECK(viol.empty());

    Orientation o = orient(g, co);
    GroupStats st = stats(g, co, o);
    CHECK(st.x_short == 1);
    CHECK(st.x_long == 1);
    CHECK(st.x[2] >= 1);  // the 2-2-singleton {8}
    CHECK(count_chains(co, false) == 1);
    CHECK(count_chains(co, true) == 1);
}

TEST_CASE("mutated orders are rejected") {
    Graph g = fig1_graph();
    CanonicalOrder co = fig1_order();
    REQUIRE(verify_order(g, co).empty());

    SUBCASE("moving a vertex between groups") {
        CanonicalOrder bad = co;
        bad.groups[4].verts = {};              // {9} emptied ...
        bad.groups[7].verts = {12, 9};         // ... and appended elsewhere
        CHECK(!verify_order(g, bad).empty());
    }
    SUBCASE("deleting a group") {
        CanonicalOrder bad = co;
        bad.groups.erase(bad.groups.begin() + 3);
        CHECK(!verify_order(g, bad).empty());
    }
    SUBCASE("permuting a chain off its path order") {
        CanonicalOrder bad = co;
        bad.groups[1].verts = {4, 3, 5};  // 3-5 is not an edge
        CHECK(!verify_order(g, bad).empty());
    }
    SUBCASE("swapping two groups breaks the predecessor clauses") {
        CanonicalOrder bad = co;
        std::swap(bad.groups[1], bad.groups[7]);
        CHECK(!verify_order(g, bad).empty());
    }
    SUBCASE("duplicating a vertex") {
        CanonicalOrder bad = co;
        bad.groups[4].verts = {9, 9};
        CHECK(!verify_order(g, bad).empty());
    }
}

TEST_CASE("compute_order is deterministic") {
    Graph g = circulant(11);
    CanonicalOrder a = compute_order(g, 1, 3);
    CanonicalOrder b = compute_order(g, 1, 3);
    REQUIRE(a.k() == b.k());
    for (int t = 0; t < a.k(); ++t) {
        CHECK(a.groups[t].chain == b.groups[t].chain);
        CHECK(a.groups[t].verts == b.groups[t].verts);
    }
}

TEST_CASE("node_cap bounds the search and reports NoOrderFound") {
    Graph g = circulant(13);
    CHECK_THROWS_AS((void)compute_order(g, 1, 3, /*node_cap=*/1), OrthoError);
    try {
        (void)compute_order(g, 1, 3, 1);
    } catch (const OrthoError& e) {
        CHECK(e.kind() == ErrorKind::NoOrderFound);
    }
}

TEST_CASE("structural identities hold on random regular instances") {
    for (int n : {8, 12, 16, 24}) {
        for (std::uint64_t seed = 1; seed <= 9; seed += 2) {
            Graph g = gen_random(n, seed, /*regular=*/true);
            CanonicalOrder co;
            bool got = false;
            for (const Edge& e : g.edges) {
                try {
                    co = compute_order(g, e.u, e.v);
                    got = true;
                    break;
                } catch (const OrthoError&) {
                }
            }
            REQUIRE(got);
            REQUIRE(verify_order(g, co).empty());
            Orientation o = orient(g, co);
            GroupStats st = stats(g, co, o);
            CHECK(st.k == co.k());
            CHECK(st.x[0] + st.x[1] + st.x[2] + st.x[3] + st.x[4] == g.n);
            CHECK(st.x[0] == 1);            // only v1 has indegree 0
            CHECK(st.x[4] == 1);            // only vn has indegree 4
            CHECK(st.x[1] == st.x[3]);      // degree-sum identity on 4-regular graphs
            // Brute-force cross-check of the indegree classes.
            int brute[5] = {0, 0, 0, 0, 0};
            for (Vertex v = 1; v <= g.n; ++v) ++brute[o.indeg[v]];
            for (int j = 0; j < 5; ++j) CHECK(st.x[j] == brute[j]);
            CHECK(st.x_short == count_chains(co, false));
            CHECK(st.x_long == count_chains(co, true));
        }
    }
}
