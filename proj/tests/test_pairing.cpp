#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "ortho/bench.hpp"
#include "ortho/canonical.hpp"
#include "ortho/layout.hpp"
#include "ortho/pairing.hpp"

using namespace ortho;
using namespace ortho::testing;

namespace {

struct Prepared {
    Graph g;
    CanonicalOrder co;
    Orientation o;
    Pairing p;
};

Prepared prepare(const Graph& g0) {
    Graph g = make_four_regular(g0);
    Prepared pr{g, {}, {}, {}};
    bool got = false;
    for (const Edge& e : g.edges) {
        if (g.double_edge && !g.edges[*g.double_edge].joins(e.u, e.v)) continue;
        for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            try {
                pr.co = compute_order(g, a, b);
                got = true;
                break;
            } catch (const OrthoError&) {
            }
        }
        if (got) break;
    }
    REQUIRE(got);
    pr.o = orient(g, pr.co);
    pr.p = compute_pairing(g, pr.co, pr.o);
    return pr;
}

bool pairable(const CanonicalOrder& co, const Orientation& o, int gi) {
    GroupKind k = group_kind(co, o, gi);
    return k == GroupKind::Singleton22 || k == GroupKind::ShortChain || k == GroupKind::LongChain;
}

void check_observation3(const Prepared& pr) {
    const auto& [g, co, o, p] = pr;
    std::set<int> used;
    for (auto [j, i] : p.pairs) {
        CHECK(j < i);
        CHECK(used.insert(j).second);  // each group in at most one pair
        CHECK(used.insert(i).second);
        CHECK(pairable(co, o, i));     // the later group is a 2-2-singleton or chain
        // Every predecessor of V_i lies in V_j or earlier.
        for (Vertex v : co.groups[i].verts)
            for (Vertex w : g.neighbors(v))
                if (o.group_of[w] < i) CHECK(o.group_of[w] <= j);
        CHECK(p.partner[j] == i);
        CHECK(p.partner[i] == j);
    }
    for (int gi : p.unpaired) {
        CHECK(!used.count(gi));
        CHECK(p.partner[gi] == -1);
    }
    CHECK(static_cast<int>(2 * p.pairs.size() + p.unpaired.size()) == co.k());
}

}  // namespace

TEST_CASE("pairing on the hand-built 13-vertex instance") {
    Graph g = fig1_graph();
    CanonicalOrder co;
    co.v1 = 1;
    co.v2 = 2;
    co.vn = 13;
    co.groups = {{false, {1, 2}}, {true, {3, 4, 5}}, {true, {6, 7}}, {false, {8}},
                 {false, {9}},    {false, {10}},     {false, {11}},  {false, {12}},
                 {false, {13}}};
    REQUIRE(verify_order(g, co).empty());
    Orientation o = orient(g, co);
    Pairing p = compute_pairing(g, co, o);
    // Backward scan matches the 2-2-singleton {8} with the short chain {6,7}.
    REQUIRE(p.pairs.size() == 1);
    CHECK(p.pairs[0] == std::pair<int, int>{2, 3});
    check_observation3({g, co, o, p});
}

TEST_CASE("Observation 3 holds across random instances") {
    for (int n : {8, 12, 16, 24, 32}) {
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            Prepared pr = prepare(gen_random(n, seed, seed % 2 == 1));
            check_observation3(pr);
        }
    }
}

TEST_CASE("pair count is at least (x22 - 1) / 2") {
    for (int n : {12, 16, 24, 32, 48}) {
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            Prepared pr = prepare(gen_random(n, seed, seed % 2 == 1));
            GroupStats st = stats(pr.g, pr.co, pr.o);
            CHECK(static_cast<int>(pr.p.pairs.size()) >= (st.x[2] - 1) / 2);
        }
    }
}

TEST_CASE("pairing is deterministic") {
    Prepared a = prepare(gen_random(24, 3, true));
    Prepared b = prepare(gen_random(24, 3, true));
    CHECK(a.p.pairs == b.p.pairs);
    CHECK(a.p.unpaired == b.p.unpaired);
}
