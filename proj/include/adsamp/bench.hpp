#pragma once

// Desk-scale benchmark harness: runs the estimator over a grid of
// (variant, threads, frame groups), takes medians over repetitions, and
// emits one comma-separated record per configuration. Speedups are computed
// on the sampling phase only, against a sequential baseline that is always
// measured first.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "adsamp/engine.hpp"
#include "adsamp/graph.hpp"
#include "adsamp/kadabra.hpp"

namespace adsamp {

struct BenchRow {
    std::string variant;
    unsigned threads = 1;
    unsigned frames = 0; // F; 0 when not applicable
    double epsilon = 0.0;
    double delta = 0.0;
    unsigned reps = 0;
    double median_preproc_s = 0.0;
    double median_ads_s = 0.0;
    std::uint64_t tau = 0;
    std::uint64_t total_samples = 0;
    double samples_per_s = 0.0;
    double speedup_vs_sequential = 0.0;
};

inline constexpr const char* kBenchHeader =
    "variant,threads,frames,epsilon,delta,reps,median_preproc_s,median_ads_s,tau,"
    "total_samples,samples_per_s,speedup_vs_sequential";

inline std::string format_bench_row(const BenchRow& r) {
    char buf[320];
    std::snprintf(buf, sizeof(buf), "%s,%u,%u,%.6g,%.6g,%u,%.6g,%.6g,%llu,%llu,%.6g,%.6g",
                  r.variant.c_str(), r.threads, r.frames, r.epsilon, r.delta, r.reps,
                  r.median_preproc_s, r.median_ads_s,
                  static_cast<unsigned long long>(r.tau),
                  static_cast<unsigned long long>(r.total_samples), r.samples_per_s,
                  r.speedup_vs_sequential);
    return buf;
}

inline BenchRow parse_bench_row(const std::string& line) {
    BenchRow r;
    std::istringstream in(line);
    std::string field;
    auto next = [&] {
        if (!std::getline(in, field, ',')) throw std::invalid_argument("short bench record");
        return field;
    };
    r.variant = next();
    r.threads = static_cast<unsigned>(std::stoul(next()));
    r.frames = static_cast<unsigned>(std::stoul(next()));
    r.epsilon = std::stod(next());
    r.delta = std::stod(next());
    r.reps = static_cast<unsigned>(std::stoul(next()));
    r.median_preproc_s = std::stod(next());
    r.median_ads_s = std::stod(next());
    r.tau = std::stoull(next());
    r.total_samples = std::stoull(next());
    r.samples_per_s = std::stod(next());
    r.speedup_vs_sequential = std::stod(next());
    return r;
}

struct BenchSpec {
    std::vector<Variant> variants{Variant::local};
    std::vector<unsigned> thread_counts{1};
    std::vector<unsigned> frame_counts{2}; // F sweep for the shared variant
    double epsilon = 0.01;
    double delta = 0.1;
    unsigned reps = 3;
    std::uint64_t check_interval = 1000;
    double latency_exponent = 1.33;
    std::uint64_t samples_per_frame = 1000;
    std::uint64_t seed = 1;
};

namespace detail {

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size() / 2;
    return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

} // namespace detail

/// Measure one configuration: `reps` repetitions, medians over them.
inline BenchRow bench_one(const Graph& g, const BenchSpec& spec, Variant variant,
                          unsigned threads, unsigned frames) {
    EngineConfig cfg;
    cfg.variant = variant;
    cfg.threads = variant == Variant::sequential ? 1 : threads;
    cfg.frame_groups = std::min(frames, cfg.threads);
    cfg.check_interval = spec.check_interval;
    cfg.latency_exponent = spec.latency_exponent;
    cfg.samples_per_frame = spec.samples_per_frame;
    cfg.base_seed = spec.seed;

    std::vector<double> preproc, ads;
    kadabra::BcResult last;
    for (unsigned r = 0; r < spec.reps; ++r) {
        last = kadabra::estimate_bc(g, spec.epsilon, spec.delta, cfg);
        preproc.push_back(last.preprocess_seconds);
        ads.push_back(last.ads_seconds);
    }

    BenchRow row;
    row.variant = to_string(variant);
    row.threads = cfg.threads;
    row.frames = variant == Variant::shared ? cfg.frame_groups : 0;
    row.epsilon = spec.epsilon;
    row.delta = spec.delta;
    row.reps = spec.reps;
    row.median_preproc_s = detail::median(preproc);
    row.median_ads_s = detail::median(ads);
    row.tau = last.tau;
    row.total_samples = last.run.total_samples;
    row.samples_per_s = row.median_ads_s > 0.0
                            ? static_cast<double>(row.total_samples) / row.median_ads_s
                            : 0.0;
    return row;
}

/// Full grid. The sequential baseline is always the first row; every row's
/// speedup is baseline median ADS time over its own.
inline std::vector<BenchRow> run_bench(const Graph& g, const BenchSpec& spec) {
    if (spec.reps < 1) throw std::invalid_argument("reps must be >= 1");
    std::vector<BenchRow> rows;

    BenchRow baseline = bench_one(g, spec, Variant::sequential, 1, 1);
    baseline.speedup_vs_sequential = 1.0;
    rows.push_back(baseline);

    const std::vector<unsigned> default_frames{2};
    for (Variant variant : spec.variants) {
        if (variant == Variant::sequential) continue; // already measured
        for (unsigned threads : spec.thread_counts) {
            const auto& frame_list =
                variant == Variant::shared ? spec.frame_counts : default_frames;
            for (unsigned frames : frame_list) {
                BenchRow row = bench_one(g, spec, variant, threads, frames);
                row.speedup_vs_sequential =
                    row.median_ads_s > 0.0 ? baseline.median_ads_s / row.median_ads_s : 0.0;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

inline void write_bench_table(const std::vector<BenchRow>& rows, std::ostream& out) {
    out << kBenchHeader << '\n';
    for (const auto& r : rows) out << format_bench_row(r) << '\n';
}

} // namespace adsamp
