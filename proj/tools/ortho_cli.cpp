#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ortho/bench.hpp"
#include "ortho/error.hpp"
#include "ortho/geometry.hpp"
#include "ortho/graph.hpp"
#include "ortho/layout.hpp"
#include "ortho/render.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    if (!is)
        throw ortho::OrthoError(ortho::ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

void spill(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    if (!os)
        throw ortho::OrthoError(ortho::ErrorKind::ParseError, "cannot write '" + path + "'");
    os << text;
}

int run(int argc, char** argv) {
    using namespace ortho;
    CLI::App app{"Orthogonal grid drawings of 3-connected 4-graphs"};
    app.require_subcommand(1);

    std::string input, out, order_file, csv, strategy = "paired", format = "json";
    int n = 8, n_min = 8, n_max = 64, step = 8, samples = 10;
    std::uint64_t seed = 1;
    bool irregular = false;

    auto* draw_cmd = app.add_subcommand("draw", "Draw a graph from an edge-list file");
    draw_cmd->add_option("--input", input, "edge-list file")->required();
    draw_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"simple", "paired"}));
    draw_cmd->add_option("--format", format)->check(CLI::IsMember({"svg", "ascii", "json"}));
    draw_cmd->add_option("--out", out, "output file (default stdout)");

    auto* gen_cmd = app.add_subcommand("gen", "Generate a random 3-connected 4-graph");
    gen_cmd->add_option("--n", n)->required();
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_flag("--irregular", irregular, "allow degree-3 vertices");
    gen_cmd->add_option("--out", out, "output file (default stdout)");

    auto* bench_cmd = app.add_subcommand("bench", "Bound-certification benchmark");
    bench_cmd->add_option("--n-min", n_min);
    bench_cmd->add_option("--n-max", n_max);
    bench_cmd->add_option("--step", step);
    bench_cmd->add_option("--samples", samples);
    bench_cmd->add_option("--csv", csv, "CSV output file");

    auto* verify_cmd = app.add_subcommand("verify-order", "Check a serialized order");
    verify_cmd->add_option("--graph", input, "edge-list file")->required();
    verify_cmd->add_option("--order", order_file, "order JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (draw_cmd->parsed()) {
        Graph g = parse_graph(slurp(input));
        DrawOptions opt;
        opt.strategy =
            strategy == "simple" ? PlacementStrategy::Simple : PlacementStrategy::Paired;
        DrawResult res = draw_full(g, opt);
        ValidationReport rep = validate(res.drawing, g);
        if (!rep.empty())
            throw OrthoError(ErrorKind::CaseAssertionFailed,
                             "validator rejected own output: " + rep[0].code + " (" +
                                 rep[0].detail + ")");
        if (format == "svg")
            spill(out, emit_svg(res.drawing));
        else if (format == "ascii")
            spill(out, emit_ascii(res.drawing));
        else
            spill(out, emit_json(res.drawing, metrics(res.drawing), &res));
        return 0;
    }
    if (gen_cmd->parsed()) {
        Graph g = gen_random(n, seed, !irregular);
        std::ostringstream os;
        os << "# n=" << n << " seed=" << seed << (irregular ? " irregular" : " regular") << "\n"
           << g.n << " " << g.m() << "\n";
        for (const Edge& e : g.edges) os << e.u << " " << e.v << "\n";
        spill(out, os.str());
        return 0;
    }
    if (bench_cmd->parsed()) {
        BenchSummary s = run_bench(n_min, n_max, step, samples,
                                   {PlacementStrategy::Simple, PlacementStrategy::Paired}, csv);
        std::cout << "instances: " << s.instances << "\n"
                  << "max HP - 1.5n (paired): " << s.max_paired_excess << "\n"
                  << "max HP - (1.5n + 0.5 x22 - x_short) (simple): " << s.max_simple_excess
                  << "\n"
                  << "max area / n^2: " << s.max_area_ratio << "\n"
                  << "HP vs n slope (paired): " << s.hp_slope << "\n";
        for (const std::string& f : s.failures) std::cerr << "failure: " << f << "\n";
        return s.ok ? 0 : 2;
    }
    // verify-order
    Graph g = parse_graph(slurp(input));
    CanonicalOrder order = order_from_json(slurp(order_file));
    auto viols = verify_order(g, order);
    nlohmann::json j;
    j["valid"] = viols.empty();
    j["violations"] = nlohmann::json::array();
    for (const auto& v : viols)
        j["violations"].push_back({{"clause", v.clause}, {"group", v.group}, {"detail", v.detail}});
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ortho::OrthoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.internal() ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
