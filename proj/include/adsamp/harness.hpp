#pragma once

// Audit drivers: instrumented executions that turn the engine's consistency
// and determinism guarantees into machine-checkable reports.

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "adsamp/audit.hpp"
#include "adsamp/engine.hpp"
#include "adsamp/graph.hpp"
#include "adsamp/kadabra.hpp"

namespace adsamp {

/// Wraps a sampler but stops after a fixed number of stopping-condition
/// evaluations, so audit runs can be driven to an exact cycle count.
/// The call counter is thread-0-private state, like the rest of the check
/// protocol.
template <class Inner>
class FixedCycleSampler {
public:
    using Scratch = typename Inner::Scratch;

    FixedCycleSampler(const Inner& inner, std::uint64_t target_cycles)
        : inner_(inner), target_(target_cycles) {}

    std::size_t state_size() const { return inner_.state_size(); }
    Scratch make_scratch() const { return inner_.make_scratch(); }
    void sample(Scratch& scratch, SplitMix64& rng, std::vector<std::uint32_t>& out) const {
        inner_.sample(scratch, rng, out);
    }
    bool check_for_stop(const StateFrame&) const { return ++calls_ >= target_; }

private:
    const Inner& inner_;
    std::uint64_t target_;
    mutable std::uint64_t calls_ = 0;
};

struct ConsistencyAuditReport {
    Variant variant = Variant::local;
    unsigned threads = 0;
    std::uint32_t delay_max_us = 0;
    ConsistencyReport consistency;
    QueueStats queue;
    std::uint64_t total_samples = 0;

    bool ok() const noexcept { return consistency.ok(); }

    void print(std::ostream& out) const {
        out << "consistency audit: variant=" << to_string(variant) << " threads=" << threads
            << " delay_max_us=" << delay_max_us << "\n"
            << "  check cycles validated: " << consistency.cycles << "\n"
            << "  sample events logged:   " << consistency.events << "\n"
            << "  violations:             " << consistency.violations.size() << "\n";
        for (const auto& v : consistency.violations)
            out << "    epoch " << v.epoch << ": " << v.detail << "\n";
        if (variant == Variant::indexed)
            out << "  queue depth: max=" << queue.max_depth << " mean=" << queue.mean_depth
                << "\n";
    }

    std::string summary_line() const {
        std::ostringstream os;
        os << "audit,consistency," << to_string(variant) << ',' << threads << ','
           << delay_max_us << ',' << consistency.cycles << ',' << consistency.violations.size()
           << ',' << (ok() ? "pass" : "fail");
        return os.str();
    }
};

/// Run the engine with audit hooks and delay injection, then replay the
/// event log against every recorded check. Zero violations means every
/// stopping-condition evaluation saw a consistent state: a sample count
/// equal to the number of logged events for exactly the accumulated epochs,
/// and data equal to the elementwise sum of those events' increments.
inline ConsistencyAuditReport consistency_audit(const Graph& g, const EngineConfig& config,
                                                std::uint32_t delay_max_us,
                                                std::uint64_t target_cycles) {
    ConsistencyAuditReport report;
    report.variant = config.variant;
    report.threads = config.threads;
    report.delay_max_us = delay_max_us;

    const ComponentLabels components = connected_components(g);
    const kadabra::KadabraParams params = kadabra::KadabraParams::for_graph(
        g, 0.05, 0.1, 0.5, config.check_interval, config.latency_exponent);
    const kadabra::Sampler sampler(g, components, params);
    const FixedCycleSampler driver(sampler, target_cycles);

    AuditSink sink(config.threads, delay_max_us, config.base_seed ^ 0xA0D17ull);
    RunResult run_result = run(driver, config, &sink);

    const bool cumulative =
        config.variant == Variant::sequential || config.variant == Variant::barrier;
    report.consistency = validate_consistency(sink, g.num_vertices(), cumulative);
    report.queue = run_result.queue;
    report.total_samples = run_result.total_samples;
    return report;
}

struct DeterminismRun {
    unsigned threads = 0;
    std::uint64_t tau = 0;
    std::vector<std::uint64_t> data;
};

struct DeterminismAuditReport {
    Variant variant = Variant::indexed;
    bool guaranteed = true; // false for variants that are free to differ
    bool identical = true;
    std::vector<DeterminismRun> runs;
    std::string first_mismatch;

    bool ok() const noexcept { return identical || !guaranteed; }

    void print(std::ostream& out) const {
        out << "determinism audit: variant=" << to_string(variant) << " thread counts:";
        for (const auto& r : runs) out << ' ' << r.threads;
        out << "\n";
        if (!guaranteed)
            out << "  note: this variant makes no determinism guarantee; result is informational\n";
        if (identical)
            out << "  all runs bit-identical (tau=" << (runs.empty() ? 0 : runs.front().tau)
                << ")\n";
        else
            out << "  MISMATCH: " << first_mismatch << "\n";
    }

    std::string summary_line() const {
        std::ostringstream os;
        os << "audit,determinism," << to_string(variant) << ',' << runs.size() << ",,"
           << (identical ? "identical" : "different") << ',' << (ok() ? "pass" : "fail");
        return os.str();
    }
};

/// Run the estimator once per thread count with the same seed and compare
/// (tau, data) bitwise. The indexed variant must match exactly; other
/// variants are reported but only as a warning, since their schedules are
/// free to differ.
inline DeterminismAuditReport determinism_audit(const Graph& g, std::uint64_t seed,
                                                const std::vector<unsigned>& thread_counts,
                                                double epsilon, double delta,
                                                EngineConfig config) {
    DeterminismAuditReport report;
    report.variant = config.variant;
    report.guaranteed = config.variant == Variant::indexed;
    config.base_seed = seed;

    for (unsigned T : thread_counts) {
        config.threads = T;
        if (config.variant == Variant::shared)
            config.frame_groups = std::min(config.frame_groups, T);
        kadabra::BcResult r = kadabra::estimate_bc(g, epsilon, delta, config);
        report.runs.push_back({T, r.tau, r.run.data});
    }

    for (std::size_t i = 1; i < report.runs.size(); ++i) {
        const auto& a = report.runs.front();
        const auto& b = report.runs[i];
        if (a.tau != b.tau) {
            report.identical = false;
            report.first_mismatch = "tau differs: T=" + std::to_string(a.threads) + " gives " +
                                    std::to_string(a.tau) + ", T=" + std::to_string(b.threads) +
                                    " gives " + std::to_string(b.tau);
            break;
        }
        for (std::size_t v = 0; v < a.data.size(); ++v) {
            if (a.data[v] != b.data[v]) {
                report.identical = false;
                report.first_mismatch =
                    "data differs at vertex " + std::to_string(v) + ": T=" +
                    std::to_string(a.threads) + " gives " + std::to_string(a.data[v]) + ", T=" +
                    std::to_string(b.threads) + " gives " + std::to_string(b.data[v]);
                break;
            }
        }
        if (!report.identical) break;
    }
    return report;
}

} // namespace adsamp
