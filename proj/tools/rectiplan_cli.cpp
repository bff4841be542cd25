#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rectiplan/corpus.hpp"
#include "rectiplan/errors.hpp"
#include "rectiplan/generators.hpp"
#include "rectiplan/graph.hpp"
#include "rectiplan/oracle.hpp"
#include "rectiplan/tester.hpp"
#include "rectiplan/witness.hpp"

using njson = nlohmann::ordered_json;

namespace {

// input/usage problems surfaced by the tool itself; exit code 2
struct cli_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cli_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cli_error("cannot write " + path);
    out << payload;
}

double elapsed_ms(std::chrono::steady_clock::time_point from) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - from)
        .count();
}

njson report_json(const rectiplan::test_report& r, double ms) {
    njson j;
    j["rectilinear_planar"] = r.rectilinear_planar;
    j["witness_root"] =
        r.witness_root ? njson(*r.witness_root) : njson(nullptr);
    j["roots_tried"] = r.roots_tried;
    j["reason"] = r.reason.empty() ? njson(nullptr) : njson(r.reason);
    j["elapsed_ms"] = ms;
    return j;
}

njson drawing_json(const rectiplan::graph& g, const rectiplan::drawing& d) {
    njson j;
    j["coords"] = njson::array();
    for (auto [x, y] : d.coords) j["coords"].push_back({x, y});
    j["edges"] = njson::array();
    for (auto [u, v] : g.edges) j["edges"].push_back({u, v});
    return j;
}

int run_test(const std::string& input, bool all_roots) {
    rectiplan::graph g = rectiplan::parse_graph(read_input(input));
    rectiplan::test_options opt;
    opt.all_roots = all_roots;
    auto t0 = std::chrono::steady_clock::now();
    rectiplan::test_report r = rectiplan::test_rectilinear(g, opt);
    std::cout << report_json(r, elapsed_ms(t0)).dump() << "\n";
    return 0;
}

int run_draw(const std::string& input, bool as_json, bool as_svg,
             const std::string& out) {
    rectiplan::graph g = rectiplan::parse_graph(read_input(input));
    rectiplan::test_options opt;
    opt.keep_table = true;
    auto t0 = std::chrono::steady_clock::now();
    rectiplan::test_report r = rectiplan::test_rectilinear(g, opt);
    if (!r.rectilinear_planar) {
        std::cout << report_json(r, elapsed_ms(t0)).dump() << "\n";
        std::cerr << "verdict: not rectilinear-planar; no drawing produced\n";
        return 0;
    }
    rectiplan::witness_pack pack = rectiplan::build_witness(g, r);
    if (as_svg || !as_json) {
        write_output(out, rectiplan::to_svg(g, pack.geom));
    } else {
        write_output(out, drawing_json(g, pack.geom).dump() + "\n");
    }
    return 0;
}

int run_gen(const std::string& kind, int n, int level, int target,
            const CLI::Option* seed_opt, std::uint64_t seed, bool as_json,
            const std::string& out, const std::string& sidecar) {
    rectiplan::graph g;
    njson side;
    if (kind == "cycle") {
        if (n < 3) throw cli_error("cycle needs n >= 3");
        g = rectiplan::gen_cycle(n);
    } else if (kind == "lowerbound") {
        if (level < 2 || level % 2 != 0)
            throw cli_error("lowerbound level must be even and at least 2");
        rectiplan::lowerbound_instance inst = rectiplan::gen_lowerbound(level);
        g = std::move(inst.g);
        side["g0_components"] = inst.g0_components;
    } else if (kind == "random") {
        if (!*seed_opt) throw cli_error("random generation requires --seed");
        if (target < 4) throw cli_error("random target must be at least 4");
        g = rectiplan::gen_random_ipsp(target, seed);
    } else {
        throw cli_error("unknown kind " + kind);
    }
    write_output(out, as_json ? rectiplan::to_json(g) + "\n"
                              : rectiplan::to_text(g));
    if (!sidecar.empty()) {
        if (side.is_null()) throw cli_error("sidecar applies to lowerbound only");
        write_output(sidecar, side.dump() + "\n");
    }
    return 0;
}

int run_oracle(const std::string& input, int cap) {
    rectiplan::graph g = rectiplan::parse_graph(read_input(input));
    rectiplan::oracle_result r = rectiplan::oracle_test(g, cap);
    njson j;
    j["feasible"] = r.feasible;
    j["embeddings_tried"] = r.embeddings_tried;
    std::cout << j.dump() << "\n";
    return 0;
}

int run_bench(const std::vector<int>& sizes, std::uint64_t seed, int runs) {
    std::cout << "n,elapsed_ms\n";
    for (size_t i = 0; i < sizes.size(); ++i) {
        rectiplan::graph g = rectiplan::gen_random_ipsp(sizes[i], seed + i);
        std::vector<double> times;
        for (int r = 0; r < runs; ++r) {
            auto t0 = std::chrono::steady_clock::now();
            rectiplan::test_rectilinear(g);
            times.push_back(elapsed_ms(t0));
        }
        std::sort(times.begin(), times.end());
        std::cout << g.n << "," << times[times.size() / 2] << "\n";
    }
    return 0;
}

int run_corpus(int count, std::uint64_t seed, int max_edges,
               int exhaustive_edges) {
    std::vector<rectiplan::graph> pool =
        rectiplan::sp_closures(exhaustive_edges);
    size_t swept = pool.size();
    for (rectiplan::graph& g :
         rectiplan::seeded_instances(count, seed, max_edges))
        pool.push_back(std::move(g));

    int disagreements = 0;
    for (const rectiplan::graph& g : pool) {
        bool fast = rectiplan::test_rectilinear(g).rectilinear_planar;
        bool slow = rectiplan::oracle_test(g, max_edges).feasible;
        if (fast != slow) {
            ++disagreements;
            std::cerr << "error: disagreement: tester says "
                      << (fast ? "true" : "false") << " on n=" << g.n
                      << " m=" << g.m() << "\n";
        }
    }
    std::cout << "checked " << pool.size() << " instances (" << swept
              << " exhaustive, " << pool.size() - swept << " random), "
              << disagreements << " disagreements\n";
    return disagreements == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rectilinear planarity for degree-4 independent-parallel "
                 "series-parallel graphs"};
    app.require_subcommand(1);

    std::string input = "-", out, sidecar, kind;
    bool all_roots = false, as_json = false, as_svg = false;
    int n = 0, level = 2, target = 0, cap = 14, runs = 5;
    int count = 500, max_edges = 12, exhaustive_edges = 8;
    std::uint64_t seed = 0;
    std::vector<int> sizes = {16384, 32768, 65536, 131072};

    CLI::App* c_test = app.add_subcommand("test", "decide drawability");
    c_test->add_option("input", input, "graph file or - for stdin");
    c_test->add_flag("--all-roots", all_roots, "evaluate every root");
    c_test->add_flag("--json", as_json, "JSON output (always on for test)");

    CLI::App* c_draw = app.add_subcommand("draw", "produce a drawing witness");
    c_draw->add_option("input", input, "graph file or - for stdin");
    c_draw->add_flag("--json", as_json, "Drawing JSON instead of SVG");
    c_draw->add_flag("--svg", as_svg, "SVG output (default)");
    c_draw->add_option("-o,--out", out, "output path (default stdout)");

    CLI::App* c_gen = app.add_subcommand("gen", "generate an instance");
    c_gen->add_option("--kind", kind, "cycle | lowerbound | random")
        ->required();
    c_gen->add_option("--n", n, "cycle length");
    c_gen->add_option("--level", level, "lowerbound level parameter (even)");
    c_gen->add_option("--target", target, "random size target");
    CLI::Option* seed_opt =
        c_gen->add_option("--seed", seed, "random generator seed");
    c_gen->add_flag("--json", as_json, "JSON graph format");
    c_gen->add_option("-o,--out", out, "output path (default stdout)");
    c_gen->add_option("--sidecar", sidecar,
                      "write lowerbound chain labels to this JSON file");

    CLI::App* c_oracle =
        app.add_subcommand("oracle", "exhaustive reference verdict");
    c_oracle->add_option("input", input, "graph file or - for stdin");
    c_oracle->add_option("--cap", cap, "edge cap for the enumeration");

    CLI::App* c_bench = app.add_subcommand("bench", "scaling harness");
    c_bench->add_option("--sizes", sizes, "instance size targets");
    c_bench->add_option("--seed", seed, "random generator seed")->required();
    c_bench->add_option("--runs", runs, "timing runs per instance");

    CLI::App* c_corpus =
        app.add_subcommand("corpus", "tester vs oracle agreement");
    c_corpus->add_option("--count", count, "random instances to check");
    c_corpus->add_option("--seed", seed, "random generator seed")->required();
    c_corpus->add_option("--max-edges", max_edges,
                         "edge cap for random instances");
    c_corpus->add_option("--exhaustive-edges", exhaustive_edges,
                         "edge cap for the exhaustive sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(c_test)) return run_test(input, all_roots);
        if (app.got_subcommand(c_draw))
            return run_draw(input, as_json, as_svg, out);
        if (app.got_subcommand(c_gen))
            return run_gen(kind, n, level, target, seed_opt, seed, as_json,
                           out, sidecar);
        if (app.got_subcommand(c_oracle)) return run_oracle(input, cap);
        if (app.got_subcommand(c_bench)) return run_bench(sizes, seed, runs);
        if (app.got_subcommand(c_corpus))
            return run_corpus(count, seed, max_edges, exhaustive_edges);
        return 2;
    } catch (const cli_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rectiplan::parse_error& e) {
        std::cerr << "error: parse: " << e.what() << "\n";
        return 2;
    } catch (const rectiplan::reject_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rectiplan::internal_error& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 3;
    }
}
