// Command-line front end: estimate betweenness scores, produce benchmark
// tables, or run the consistency/determinism audits.
//
// Exit codes: 0 success, 1 usage or I/O failure, 2 audit violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "adsamp/bench.hpp"
#include "adsamp/engine.hpp"
#include "adsamp/graph.hpp"
#include "adsamp/harness.hpp"
#include "adsamp/kadabra.hpp"

namespace {

struct Options {
    std::string graph_path;
    std::string variant = "local";
    std::string threads = "0"; // 0 = all available cores
    double epsilon = 0.01;
    double delta = 0.1;
    std::string frames = "2";
    std::uint64_t check_interval = 1000;
    double xi = 1.33;
    std::uint64_t samples_per_frame = 1000;
    std::uint64_t seed = 1;
    unsigned reps = 3;
    std::string output;
    std::vector<std::string> audits;
    std::uint32_t delay_max = 100;
};

std::vector<unsigned> parse_uint_list(const std::string& s, const char* what) {
    std::vector<unsigned> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(static_cast<unsigned>(std::stoul(tok)));
    }
    if (out.empty()) throw std::invalid_argument(std::string("empty list for ") + what);
    return out;
}

std::vector<adsamp::Variant> parse_variant_list(const std::string& s) {
    std::vector<adsamp::Variant> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.push_back(adsamp::parse_variant(tok));
    if (out.empty()) throw std::invalid_argument("empty variant list");
    return out;
}

unsigned default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

adsamp::ParsedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
    return adsamp::parse_edge_list(in);
}

int cmd_run(const Options& opt) {
    const adsamp::ParsedGraph parsed = load_graph(opt.graph_path);

    adsamp::EngineConfig cfg;
    cfg.variant = adsamp::parse_variant(opt.variant);
    const auto threads = parse_uint_list(opt.threads, "--threads");
    cfg.threads = threads.front() == 0 ? default_threads() : threads.front();
    if (cfg.variant == adsamp::Variant::sequential) cfg.threads = 1;
    cfg.frame_groups = std::min(parse_uint_list(opt.frames, "--frames").front(), cfg.threads);
    cfg.check_interval = opt.check_interval;
    cfg.latency_exponent = opt.xi;
    cfg.samples_per_frame = opt.samples_per_frame;
    cfg.base_seed = opt.seed;
    cfg.validate();

    const adsamp::kadabra::BcResult result =
        adsamp::kadabra::estimate_bc(parsed.graph, opt.epsilon, opt.delta, cfg);

    std::ostream* scores_out = &std::cout;
    std::ofstream file;
    if (!opt.output.empty()) {
        file.open(opt.output);
        if (!file) throw std::runtime_error("cannot open output file '" + opt.output + "'");
        scores_out = &file;
    }
    *scores_out << "vertex_id,score\n";
    char line[64];
    for (std::size_t v = 0; v < result.scores.size(); ++v) {
        std::snprintf(line, sizeof(line), "%llu,%.10g\n",
                      static_cast<unsigned long long>(parsed.original_ids[v]),
                      result.scores[v]);
        *scores_out << line;
    }

    std::cout << "graph: " << opt.graph_path << "  vertices: " << parsed.graph.num_vertices()
              << "  edges: " << parsed.graph.num_edges() << "\n"
              << "variant: " << adsamp::to_string(cfg.variant) << "  threads: " << cfg.threads
              << "\n"
              << "diameter_bound: " << result.diameter_bound << "  omega: " << result.omega
              << "\n"
              << "tau: " << result.tau << "  reason: " << adsamp::kadabra::to_string(result.reason)
              << "\n"
              << "preprocessing_seconds: " << result.preprocess_seconds << "\n"
              << "ads_seconds: " << result.ads_seconds << "\n";
    if (result.run.queue.high_water_exceeded)
        std::cerr << "warning: a thread buffered more than " << cfg.queue_high_water
                  << " frames\n";
    if (!opt.output.empty()) std::cout << "scores written to: " << opt.output << "\n";
    return 0;
}

int cmd_bench(const Options& opt) {
    const adsamp::ParsedGraph parsed = load_graph(opt.graph_path);

    adsamp::BenchSpec spec;
    spec.variants = parse_variant_list(opt.variant);
    spec.thread_counts = parse_uint_list(opt.threads, "--threads");
    for (auto& t : spec.thread_counts)
        if (t == 0) t = default_threads();
    spec.frame_counts = parse_uint_list(opt.frames, "--frames");
    spec.epsilon = opt.epsilon;
    spec.delta = opt.delta;
    spec.reps = opt.reps;
    spec.check_interval = opt.check_interval;
    spec.latency_exponent = opt.xi;
    spec.samples_per_frame = opt.samples_per_frame;
    spec.seed = opt.seed;

    const auto rows = adsamp::run_bench(parsed.graph, spec);

    if (!opt.output.empty()) {
        std::ofstream file(opt.output);
        if (!file) throw std::runtime_error("cannot open output file '" + opt.output + "'");
        adsamp::write_bench_table(rows, file);
        std::cout << "bench table written to: " << opt.output << "\n";
    } else {
        adsamp::write_bench_table(rows, std::cout);
    }
    return 0;
}

int cmd_audit(const Options& opt) {
    const adsamp::ParsedGraph parsed = load_graph(opt.graph_path);
    if (opt.audits.empty())
        throw std::invalid_argument("audit mode needs --audit consistency and/or determinism");

    adsamp::EngineConfig cfg;
    cfg.variant = adsamp::parse_variant(opt.variant);
    const auto thread_list = parse_uint_list(opt.threads, "--threads");
    cfg.threads = thread_list.front() == 0 ? default_threads() : thread_list.front();
    cfg.frame_groups = std::min(parse_uint_list(opt.frames, "--frames").front(), cfg.threads);
    cfg.check_interval = opt.check_interval;
    cfg.latency_exponent = opt.xi;
    cfg.samples_per_frame = opt.samples_per_frame;
    cfg.base_seed = opt.seed;

    bool violation = false;
    for (const std::string& kind : opt.audits) {
        if (kind == "consistency") {
            cfg.validate();
            const auto report = adsamp::consistency_audit(parsed.graph, cfg, opt.delay_max,
                                                          /*target_cycles=*/1000);
            report.print(std::cout);
            std::cout << report.summary_line() << "\n";
            violation |= !report.ok();
        } else if (kind == "determinism") {
            std::vector<unsigned> counts = thread_list;
            if (counts.size() == 1) counts = {1, 2, 4};
            if (cfg.variant != adsamp::Variant::indexed)
                std::cout << "warning: variant '" << adsamp::to_string(cfg.variant)
                          << "' makes no determinism guarantee; auditing informationally\n";
            const auto report = adsamp::determinism_audit(parsed.graph, opt.seed, counts,
                                                          opt.epsilon, opt.delta, cfg);
            report.print(std::cout);
            std::cout << report.summary_line() << "\n";
            violation |= !report.ok();
        } else {
            throw std::invalid_argument("unknown audit kind '" + kind + "'");
        }
    }
    return violation ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parallel adaptive-sampling engine with a betweenness-centrality sampler"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--graph", opt.graph_path, "edge-list file")->required();
        cmd->add_option("--variant", opt.variant,
                        "sequential|barrier|local|shared|indexed (bench: comma list)");
        cmd->add_option("--threads", opt.threads, "thread count, 0 = all cores (lists allowed)");
        cmd->add_option("--epsilon", opt.epsilon, "absolute error bound");
        cmd->add_option("--delta", opt.delta, "failure probability");
        cmd->add_option("--frames", opt.frames, "shared-frame pair count F (lists allowed)");
        cmd->add_option("--check-interval", opt.check_interval, "samples between checks (N)");
        cmd->add_option("--xi", opt.xi, "check-latency exponent");
        cmd->add_option("--samples-per-frame", opt.samples_per_frame,
                        "fixed frame size for the indexed variant");
        cmd->add_option("--seed", opt.seed, "base random seed");
        cmd->add_option("--reps", opt.reps, "bench repetitions");
        cmd->add_option("--output", opt.output, "output file (default: stdout)");
        cmd->add_option("--delay-max", opt.delay_max, "audit delay injection bound (us)");
    };

    CLI::App* run_cmd = app.add_subcommand("run", "estimate betweenness scores");
    add_common(run_cmd);
    CLI::App* bench_cmd = app.add_subcommand("bench", "benchmark engine variants");
    add_common(bench_cmd);
    CLI::App* audit_cmd = app.add_subcommand("audit", "run consistency/determinism audits");
    add_common(audit_cmd);
    audit_cmd->add_option("--audit", opt.audits, "consistency and/or determinism");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(opt);
        if (bench_cmd->parsed()) return cmd_bench(opt);
        if (audit_cmd->parsed()) return cmd_audit(opt);
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
