#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ortho/graph.hpp"
#include "ortho/layout.hpp"

namespace ortho {

struct BenchRecord {
    int n = 0;
    std::uint64_t seed = 0;
    std::string strategy;
    int W = 0, H = 0, half_perimeter = 0;
    long long area = 0;
    int bends = 0;
    int x22 = 0, x_short = 0, x_long = 0, pair_count = 0;
    double runtime_ms = 0.0;
};

/// Simple 3-connected 4-graph, deterministic per (n, seed).  regular:
/// pairing-model 4-regular generation with rejection; otherwise a random
/// set of disjoint edges is additionally deleted (keeping 3-connectivity).
Graph gen_random(int n, std::uint64_t seed, bool regular);

struct BenchSummary {
    int instances = 0;
    double max_paired_excess = 0.0;   // max HP - 1.5 n (paired)
    double max_simple_excess = 0.0;   // max HP - (1.5 n + 0.5 x22 - x_short) (simple)
    double max_area_ratio = 0.0;      // max area / n^2
    double hp_slope = 0.0;            // least-squares slope of HP vs n (paired)
    bool ok = true;
    std::vector<std::string> failures;
};

/// Runs samples_per_n instances for each n in [n_min, n_max] stepping by
/// step, under every requested strategy; writes BenchRecord rows to out_csv
/// (empty path: no file).  Workers run in parallel (ORTHO_GRID_THREADS
/// overrides the count); records are merged in (n, seed, strategy) order.
BenchSummary run_bench(int n_min, int n_max, int step, int samples_per_n,
                       const std::vector<PlacementStrategy>& strategies,
                       const std::string& out_csv, std::vector<BenchRecord>* records_out = nullptr);

std::string csv_header();
std::string csv_row(const BenchRecord& r);

}  // namespace ortho
