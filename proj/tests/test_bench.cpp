#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "helpers.hpp"
#include "ortho/bench.hpp"

using namespace ortho;
using namespace ortho::testing;

namespace {

std::set<std::pair<Vertex, Vertex>> edge_set(const Graph& g) {
    std::set<std::pair<Vertex, Vertex>> s;
    for (const Edge& e : g.edges) s.insert(std::minmax(e.u, e.v));
    return s;
}

}  // namespace

TEST_CASE("the only 4-regular graph on five vertices is K5") {
    Graph g = gen_random(5, 7, /*regular=*/true);
    CHECK(edge_set(g) == edge_set(k5()));
}

TEST_CASE("generated instances are simple, 3-connected, degree-bounded") {
    for (int n : {6, 8, 12, 16, 24}) {
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            for (bool regular : {true, false}) {
                Graph g = gen_random(n, seed, regular);
                CHECK(g.n == n);
                CHECK(is_three_connected(g));
                CHECK(!g.double_edge.has_value());
                if (regular) {
                    CHECK(g.is_four_regular());
                } else {
                    int below = 0;
                    for (Vertex v = 1; v <= n; ++v) {
                        CHECK(g.degree(v) >= 3);
                        below += g.degree(v) < 4;
                    }
                    CHECK(below >= 1);  // at least one edge was deleted
                }
            }
        }
    }
}

TEST_CASE("gen_random is deterministic per (n, seed, kind) and varies with seed") {
    CHECK(edge_set(gen_random(16, 3, true)) == edge_set(gen_random(16, 3, true)));
    CHECK(edge_set(gen_random(16, 4, false)) == edge_set(gen_random(16, 4, false)));
    CHECK(edge_set(gen_random(16, 3, true)) != edge_set(gen_random(16, 5, true)));
}

TEST_CASE("csv_header is the golden column list") {
    CHECK(csv_header() ==
          "n,seed,strategy,W,H,half_perimeter,area,bends,x22,x_short,x_long,pair_count,runtime_ms");
}

TEST_CASE("run_bench produces consistent records and a clean summary") {
    std::vector<BenchRecord> recs;
    BenchSummary s = run_bench(8, 16, 4, 4, {PlacementStrategy::Simple, PlacementStrategy::Paired},
                               "", &recs);
    CHECK(s.ok);
    CHECK(s.failures.empty());
    // one record per instance and strategy
    CHECK(s.instances == 3 * 4 * 2);
    CHECK(recs.size() == static_cast<size_t>(s.instances));
    for (const BenchRecord& r : recs) {
        CHECK(r.half_perimeter == r.W + r.H);
        CHECK(r.area == static_cast<long long>(r.W) * r.H);
        CHECK((r.strategy == "simple" || r.strategy == "paired"));
        std::string row = csv_row(r);
        CHECK(row.rfind(std::to_string(r.n) + "," + std::to_string(r.seed), 0) == 0);
    }
    CHECK(s.max_paired_excess <= kPairedSlack);
    CHECK(s.max_area_ratio > 0.0);
}

TEST_CASE("records do not depend on the worker-thread count") {
    auto strip_runtime = [](std::vector<BenchRecord> rs) {
        for (auto& r : rs) r.runtime_ms = 0.0;
        return rs;
    };
    std::vector<BenchRecord> seq, par;
    setenv("ORTHO_GRID_THREADS", "1", 1);
    run_bench(8, 12, 4, 3, {PlacementStrategy::Paired}, "", &seq);
    setenv("ORTHO_GRID_THREADS", "4", 1);
    run_bench(8, 12, 4, 3, {PlacementStrategy::Paired}, "", &par);
    unsetenv("ORTHO_GRID_THREADS");
    seq = strip_runtime(seq);
    par = strip_runtime(par);
    REQUIRE(seq.size() == par.size());
    for (size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].n == par[i].n);
        CHECK(seq[i].seed == par[i].seed);
        CHECK(seq[i].half_perimeter == par[i].half_perimeter);
        CHECK(seq[i].area == par[i].area);
        CHECK(seq[i].bends == par[i].bends);
        CHECK(seq[i].x22 == par[i].x22);
    }
}
