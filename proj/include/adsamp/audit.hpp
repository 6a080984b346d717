#pragma once

// Instrumentation for auditing engine runs. When a sink is attached, every
// sample appends one event to its thread's private log and every completed
// stopping-condition evaluation appends a check record; the logs are merged
// and validated single-threaded after the run.
//
// Hooks record strictly after the release/acquire pairs the engine already
// performs, so instrumented runs exercise the same ordering contract as
// production runs. Optional delay injection widens the interleavings the
// schedule can produce.

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "adsamp/frame.hpp"
#include "adsamp/rng.hpp"

namespace adsamp {

struct AuditEvent {
    std::uint64_t epoch;
    std::vector<std::uint32_t> increments;
};

struct CheckRecord {
    std::uint64_t epoch;  // e_chk of the accumulated state
    std::uint64_t num;
    std::vector<std::uint64_t> data;
};

class AuditSink {
public:
    AuditSink(unsigned threads, std::uint32_t delay_max_us = 0,
              std::uint64_t delay_seed = 0x5EEDu)
        : events_(threads), publications_(threads), delay_max_us_(delay_max_us) {
        delay_rngs_.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            delay_rngs_.emplace_back(reseed(delay_seed, t));
    }

    void on_sample(unsigned thread, std::uint64_t epoch,
                   std::span<const std::uint32_t> increments) {
        events_[thread].push_back({epoch, {increments.begin(), increments.end()}});
    }

    void on_publish(unsigned thread, std::uint64_t epoch) {
        publications_[thread].push_back(epoch);
    }

    void on_check(std::uint64_t epoch, const StateFrame& accumulated) {
        checks_.push_back({epoch, accumulated.num(), accumulated.snapshot()});
    }

    /// Random sleep in [0, delay_max] microseconds; no-op when disabled.
    void delay(unsigned thread) {
        if (delay_max_us_ == 0) return;
        auto us = delay_rngs_[thread].next_below(delay_max_us_ + 1);
        if (us > 0) std::this_thread::sleep_for(std::chrono::microseconds(us));
    }

    const std::vector<std::vector<AuditEvent>>& events() const noexcept { return events_; }
    const std::vector<std::vector<std::uint64_t>>& publications() const noexcept {
        return publications_;
    }
    const std::vector<CheckRecord>& checks() const noexcept { return checks_; }
    unsigned threads() const noexcept { return static_cast<unsigned>(events_.size()); }

private:
    std::vector<std::vector<AuditEvent>> events_;        // [thread], owner-appended
    std::vector<std::vector<std::uint64_t>> publications_;
    std::vector<CheckRecord> checks_;                    // thread 0 only
    std::uint32_t delay_max_us_;
    std::vector<SplitMix64> delay_rngs_;
};

struct AuditViolation {
    std::uint64_t epoch;
    std::string detail;
};

struct ConsistencyReport {
    std::uint64_t cycles = 0;
    std::uint64_t events = 0;
    std::vector<AuditViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Validate every check record against the raw event log.
///
/// Per-epoch mode (epoch engines): a record for e_chk must equal the count
/// and elementwise sum of exactly the events labeled e_chk. Cumulative mode
/// (sequential/barrier): a record must cover all events labeled <= e_chk.
/// Also verifies that published epochs strictly increase per thread.
inline ConsistencyReport validate_consistency(const AuditSink& sink, std::size_t n,
                                              bool cumulative) {
    ConsistencyReport report;

    for (unsigned t = 0; t < sink.threads(); ++t) {
        const auto& pubs = sink.publications()[t];
        for (std::size_t i = 1; i < pubs.size(); ++i)
            if (pubs[i] <= pubs[i - 1])
                report.violations.push_back(
                    {pubs[i], "thread " + std::to_string(t) + " published non-increasing epoch"});
    }

    struct EpochSum {
        std::uint64_t count = 0;
        std::vector<std::uint64_t> data;
    };
    std::unordered_map<std::uint64_t, EpochSum> by_epoch;
    for (const auto& log : sink.events()) {
        report.events += log.size();
        for (const auto& ev : log) {
            auto& slot = by_epoch[ev.epoch];
            if (slot.data.empty()) slot.data.assign(n, 0);
            slot.count += 1;
            for (std::uint32_t v : ev.increments) slot.data[v] += 1;
        }
    }

    for (const auto& rec : sink.checks()) {
        ++report.cycles;
        std::uint64_t want_num = 0;
        std::vector<std::uint64_t> want(n, 0);
        auto add_epoch = [&](std::uint64_t e) {
            auto it = by_epoch.find(e);
            if (it == by_epoch.end()) return;
            want_num += it->second.count;
            for (std::size_t v = 0; v < n; ++v) want[v] += it->second.data[v];
        };
        if (cumulative) {
            for (std::uint64_t e = 1; e <= rec.epoch; ++e) add_epoch(e);
        } else {
            add_epoch(rec.epoch);
        }

        if (rec.num != want_num) {
            report.violations.push_back(
                {rec.epoch, "num mismatch: checked " + std::to_string(rec.num) +
                                ", event log has " + std::to_string(want_num)});
            continue;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (rec.data[v] != want[v]) {
                report.violations.push_back(
                    {rec.epoch, "data mismatch at vertex " + std::to_string(v) + ": checked " +
                                    std::to_string(rec.data[v]) + ", event log has " +
                                    std::to_string(want[v])});
                break;
            }
        }
    }
    return report;
}

} // namespace adsamp
