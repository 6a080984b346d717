#pragma once

// Parallel adaptive-sampling runtime.
//
// An adaptive sampling algorithm draws samples until a data-dependent
// stopping condition holds; the condition must be evaluated on a consistent
// state (a number of samples together with exactly those samples' data).
// This engine provides five execution strategies behind one interface:
//
//   sequential : the plain loop, condition checked every N samples.
//   barrier    : batches of N samples in parallel, full barrier, then a
//                single-threaded check. Atomic fetch-add on one shared frame.
//   local      : epoch engine; each thread cycles a private pair of frames
//                and publishes finished ones. No read-modify-write and no
//                blocking in the sampling loop; the only synchronization is
//                a release store on publication and matching acquire loads
//                by the checking thread.
//   shared     : epoch engine with F frame pairs shared by T threads
//                (group = t mod F); writers use atomic fetch-add. Trades
//                read-modify-write traffic for an O(F n) rather than O(T n)
//                memory footprint and accumulation cost.
//   indexed    : deterministic engine; every frame holds a fixed number of
//                samples and its random stream is a pure function of
//                (base seed, frame position), so results are bit-identical
//                for any thread count and any timing.
//
// Epoch-engine synchronization contract:
//   (a) sfFin[t] is written only by thread t via store-release and read by
//       thread 0 via load-acquire; the pair makes every prior write to the
//       published frame visible before accumulation.
//   (b) stop and epochToRead are relaxed atomics; they carry no data.
//   (c) a published frame is immutable until reclaimed, and reclamation
//       happens only after thread 0 has accumulated its epoch. The reclaim
//       path is reached only through the branch on epochToRead == e_sam,
//       whose value thread 0 stores strictly after finishing that epoch.
//   (d) shared-variant frames take concurrent relaxed fetch-add on num and
//       data cells.
//   (e) there is no other cross-thread communication in the sampling loop.

#include <algorithm>
#include <array>
#include <atomic>
#include <barrier>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "adsamp/audit.hpp"
#include "adsamp/frame.hpp"
#include "adsamp/rng.hpp"

namespace adsamp {

enum class Variant { sequential, barrier, local, shared, indexed };

inline const char* to_string(Variant v) {
    switch (v) {
        case Variant::sequential: return "sequential";
        case Variant::barrier: return "barrier";
        case Variant::local: return "local";
        case Variant::shared: return "shared";
        case Variant::indexed: return "indexed";
    }
    return "?";
}

inline Variant parse_variant(const std::string& s) {
    if (s == "sequential") return Variant::sequential;
    if (s == "barrier") return Variant::barrier;
    if (s == "local") return Variant::local;
    if (s == "shared") return Variant::shared;
    if (s == "indexed") return Variant::indexed;
    throw std::invalid_argument("unknown variant '" + s + "'");
}

struct EngineConfig {
    unsigned threads = 1;                   // T
    Variant variant = Variant::local;
    unsigned frame_groups = 2;              // F (shared variant), 1 <= F <= T
    std::uint64_t check_interval = 1000;    // N
    double latency_exponent = 1.33;         // xi
    std::uint64_t samples_per_frame = 1000; // indexed variant
    bool bounded_memory = false;            // indexed: reserve frame indices
    unsigned reservation_block = 4;         // a (indices per reservation: a+1)
    std::uint64_t queue_high_water = 64;    // indexed: warn beyond this depth
    std::uint64_t base_seed = 1;

    void validate() const {
        if (threads < 1) throw std::invalid_argument("threads must be >= 1");
        if (variant == Variant::shared && (frame_groups < 1 || frame_groups > threads))
            throw std::invalid_argument("frame groups must satisfy 1 <= F <= T");
        if (check_interval < 1) throw std::invalid_argument("check interval must be >= 1");
        if (!(latency_exponent > 0)) throw std::invalid_argument("xi must be > 0");
        if (samples_per_frame < 1) throw std::invalid_argument("samples per frame must be >= 1");
        if (reservation_block < 1) throw std::invalid_argument("reservation block must be >= 1");
    }
};

/// Number of samples thread 0 collects before initiating a check cycle:
/// max(1, round(N / T^xi)). At T=1 this is the sequential check interval.
inline std::uint64_t check_budget(std::uint64_t check_interval, unsigned threads, double xi) {
    if (check_interval < 1 || threads < 1 || !(xi > 0))
        throw std::invalid_argument("check_budget: need N >= 1, T >= 1, xi > 0");
    const double v = static_cast<double>(check_interval) / std::pow(threads, xi);
    const auto rounded = std::llround(v);
    return rounded < 1 ? 1 : static_cast<std::uint64_t>(rounded);
}

/// Frame group written by thread t when F pairs are shared among T threads.
inline unsigned shared_frame_target(unsigned t, unsigned F) noexcept { return t % F; }

/// Epoch-indexed frame label (e*T + t): every thread contributes exactly one
/// frame per epoch. The deterministic engine seeds streams by the frame's
/// zero-based stream position instead; see run_indexed.
inline std::uint64_t indexed_frame_index(std::uint64_t epoch, unsigned t, unsigned T) noexcept {
    return epoch * T + t;
}

/// Shared claim counter for bounded-memory index reservation.
struct ReservationCounter {
    std::atomic<std::uint64_t> next_claim{0};
};

/// Atomically claim the smallest unreserved base index and return the block
/// (base, base+T, ..., base+aT). Bases fill each superblock of T*(a+1)
/// consecutive indices left to right before moving on, so every index is
/// handed out exactly once.
inline std::vector<std::uint64_t> reserve_indices(ReservationCounter& counter, unsigned T,
                                                  unsigned a) {
    const std::uint64_t k = counter.next_claim.fetch_add(1, std::memory_order_relaxed);
    const std::uint64_t base = (k / T) * T * (a + 1) + (k % T);
    std::vector<std::uint64_t> indices(a + 1);
    for (unsigned m = 0; m <= a; ++m) indices[m] = base + static_cast<std::uint64_t>(m) * T;
    return indices;
}

template <class S>
concept Sampler = requires(const S& s, typename S::Scratch& scratch, SplitMix64& rng,
                           std::vector<std::uint32_t>& increments, const StateFrame& acc) {
    typename S::Scratch;
    { s.state_size() } -> std::convertible_to<std::size_t>;
    { s.make_scratch() } -> std::same_as<typename S::Scratch>;
    { s.sample(scratch, rng, increments) };
    { s.check_for_stop(acc) } -> std::convertible_to<bool>;
};

struct QueueStats {
    std::uint64_t max_depth = 0;     // most frames buffered by one thread
    double mean_depth = 0.0;         // mean depth observed at consumption
    std::uint64_t allocated = 0;     // frames ever allocated across threads
    bool high_water_exceeded = false;
};

struct RunResult {
    std::vector<std::uint64_t> data;              // accumulated data at the stopping check
    std::uint64_t num = 0;                        // tau: samples in that accumulation
    std::uint64_t total_samples = 0;              // drawn by all threads, incl. unconsumed
    std::vector<std::uint64_t> per_thread_samples;
    std::uint64_t check_cycles = 0;               // completed stopping-condition evaluations
    std::uint64_t stop_epoch = 0;
    QueueStats queue;                             // indexed variant only
};

namespace detail {

/// Unbounded single-producer single-consumer queue. The handoff is one
/// release store on the link pointer matched by an acquire load; neither
/// side performs read-modify-write operations.
template <class T>
class SpscQueue {
public:
    SpscQueue() : head_(new Node), tail_(head_) {}
    SpscQueue(const SpscQueue&) = delete;
    SpscQueue& operator=(const SpscQueue&) = delete;
    ~SpscQueue() {
        Node* n = head_;
        while (n) {
            Node* next = n->next.load(std::memory_order_relaxed);
            delete n;
            n = next;
        }
    }

    void push(T value) { // producer only
        Node* n = new Node;
        n->value = std::move(value);
        tail_->next.store(n, std::memory_order_release);
        tail_ = n;
    }

    bool pop(T& out) { // consumer only
        Node* next = head_->next.load(std::memory_order_acquire);
        if (!next) return false;
        out = std::move(next->value);
        delete head_;
        head_ = next;
        return true;
    }

private:
    struct Node {
        std::atomic<Node*> next{nullptr};
        T value{};
    };
    Node* head_; // consumer-owned
    Node* tail_; // producer-owned
};

inline void rethrow_first(std::exception_ptr& slot, std::mutex& mu, std::exception_ptr e,
                          std::atomic<bool>& stop) {
    {
        std::lock_guard lock(mu);
        if (!slot) slot = std::move(e);
    }
    stop.store(true, std::memory_order_relaxed);
}

} // namespace detail

/// Algorithm: check the stopping condition, then draw N samples, repeat.
/// The condition is only ever seen at check points, so the returned count is
/// the first multiple of N at which it held.
template <Sampler S>
RunResult run_sequential(const S& sampler, const EngineConfig& cfg, AuditSink* audit = nullptr) {
    cfg.validate();
    const std::size_t n = sampler.state_size();
    StateFrame frame(n, 1);
    auto scratch = sampler.make_scratch();
    SplitMix64 rng = stream_rng(cfg.base_seed, 0);
    std::vector<std::uint32_t> inc;

    RunResult res;
    std::uint64_t cycles = 0;
    for (;;) {
        ++cycles;
        if (audit) audit->on_check(cycles, frame);
        if (sampler.check_for_stop(frame)) break;
        for (std::uint64_t i = 0; i < cfg.check_interval; ++i) {
            inc.clear();
            sampler.sample(scratch, rng, inc);
            if (audit) audit->delay(0);
            frame.add_sample(inc);
            if (audit) audit->on_sample(0, cycles + 1, inc);
        }
    }
    res.num = frame.num();
    res.data = frame.snapshot();
    res.total_samples = res.num;
    res.per_thread_samples = {res.num};
    res.check_cycles = cycles;
    res.stop_epoch = cycles;
    return res;
}

/// Baseline: repeat { draw N samples split across T threads into one shared
/// frame; full barrier; one thread checks the condition }. The returned
/// count is a multiple of N.
template <Sampler S>
RunResult run_barrier(const S& sampler, const EngineConfig& cfg, AuditSink* audit = nullptr) {
    cfg.validate();
    const unsigned T = cfg.threads;
    const std::size_t n = sampler.state_size();
    StateFrame frame(n, 0);

    RunResult res;
    res.per_thread_samples.assign(T, 0);
    std::uint64_t cycles = 1;
    if (audit) audit->on_check(0, frame);
    if (sampler.check_for_stop(frame)) {
        res.data = frame.snapshot();
        res.check_cycles = 1;
        return res;
    }

    std::atomic<bool> stop{false};
    std::exception_ptr error;
    std::mutex error_mu;

    auto on_round_complete = [&]() noexcept {
        // Runs in exactly one thread while the others wait at the barrier.
        ++cycles;
        const std::uint64_t round = cycles - 1;
        if (audit) audit->on_check(round, frame);
        try {
            if (sampler.check_for_stop(frame)) stop.store(true, std::memory_order_relaxed);
        } catch (...) {
            detail::rethrow_first(error, error_mu, std::current_exception(), stop);
        }
    };
    std::barrier sync(T, on_round_complete);

    auto worker = [&](unsigned t) {
        auto scratch = sampler.make_scratch();
        SplitMix64 rng = stream_rng(cfg.base_seed, t);
        std::vector<std::uint32_t> inc;
        const std::uint64_t quota =
            cfg.check_interval / T + (t < cfg.check_interval % T ? 1 : 0);
        std::uint64_t drawn = 0;
        std::uint64_t round = 1;
        try {
            while (!stop.load(std::memory_order_relaxed)) {
                for (std::uint64_t i = 0; i < quota; ++i) {
                    inc.clear();
                    sampler.sample(scratch, rng, inc);
                    if (audit) audit->delay(t);
                    frame.add_sample_atomic(inc);
                    if (audit) audit->on_sample(t, round, inc);
                    ++drawn;
                }
                ++round;
                sync.arrive_and_wait();
            }
        } catch (...) {
            detail::rethrow_first(error, error_mu, std::current_exception(), stop);
            sync.arrive_and_drop();
        }
        res.per_thread_samples[t] = drawn;
    };

    std::vector<std::thread> threads;
    threads.reserve(T);
    for (unsigned t = 0; t < T; ++t) threads.emplace_back(worker, t);
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);

    res.num = frame.num();
    res.data = frame.snapshot();
    res.total_samples = res.num;
    res.check_cycles = cycles;
    res.stop_epoch = cycles - 1;
    return res;
}

/// Epoch engine (local and shared variants).
///
/// Worker loop: sample into the current frame; if epochToRead has caught up
/// with the frame's epoch, publish it and move to the next frame of the
/// pair. Thread 0 additionally runs the check protocol: initiate a cycle
/// once its own sample budget N0 is spent, then poll until every thread has
/// published the cycle's epoch, accumulate, and evaluate the condition.
template <Sampler S>
RunResult run_epoch(const S& sampler, const EngineConfig& cfg, AuditSink* audit = nullptr) {
    cfg.validate();
    if (cfg.variant != Variant::local && cfg.variant != Variant::shared)
        throw std::invalid_argument("run_epoch expects the local or shared variant");
    const unsigned T = cfg.threads;
    const bool shared_mode = cfg.variant == Variant::shared;
    const unsigned F = shared_mode ? cfg.frame_groups : T;
    const std::size_t n = sampler.state_size();
    const std::uint64_t budget = check_budget(cfg.check_interval, T, cfg.latency_exponent);

    // F pairs of frames; the slot for epoch e is e & 1 (even epochs first
    // slot, odd epochs second). There is no frame for epoch 0.
    std::vector<std::array<StateFrame, 2>> pairs(F);
    for (auto& pair : pairs) {
        pair[0].reset(n, 2);
        pair[1].reset(n, 1);
    }

    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> epoch_to_read{0};
    std::vector<std::atomic<StateFrame*>> sf_fin(T);
    for (auto& slot : sf_fin) slot.store(nullptr, std::memory_order_relaxed);

    RunResult res;
    res.per_thread_samples.assign(T, 0);
    StateFrame result_frame;
    std::uint64_t cycles = 0;
    std::exception_ptr error;
    std::mutex error_mu;

    auto worker = [&](unsigned t) {
        auto scratch = sampler.make_scratch();
        SplitMix64 rng = stream_rng(cfg.base_seed, t);
        std::vector<std::uint32_t> inc;
        const unsigned group = shared_mode ? shared_frame_target(t, F) : t;
        std::uint64_t e_sam = 1;
        StateFrame* f_sam = &pairs[group][1];
        std::uint64_t drawn = 0;

        // Thread 0's check-cycle state.
        std::uint64_t e_chk = 0;
        bool in_check = false;
        std::uint64_t since_check = 0;

        auto check_frames = [&] {
            if (!in_check) {
                if (since_check < budget) return;
                ++e_chk;
                epoch_to_read.store(e_chk, std::memory_order_relaxed);
                in_check = true;
                since_check = 0;
            }
            for (unsigned i = 0; i < T; ++i) {
                StateFrame* f = sf_fin[i].load(std::memory_order_acquire);
                if (f == nullptr || f->epoch() != e_chk) return;
            }
            StateFrame acc(n, e_chk);
            for (unsigned g = 0; g < F; ++g) acc.accumulate(pairs[g][e_chk & 1]);
            ++cycles;
            if (audit) audit->on_check(e_chk, acc);
            if (sampler.check_for_stop(acc)) {
                result_frame = std::move(acc);
                res.stop_epoch = e_chk;
                stop.store(true, std::memory_order_relaxed);
                return;
            }
            if (shared_mode) {
                // Accumulated group frames are recycled here for epoch
                // e_chk + 2; workers reach them only after observing
                // epochToRead == e_chk + 1.
                for (unsigned g = 0; g < F; ++g) pairs[g][e_chk & 1].recycle(e_chk + 2);
            }
            in_check = false;
        };

        try {
            for (;;) {
                if (stop.load(std::memory_order_relaxed)) break;
                inc.clear();
                sampler.sample(scratch, rng, inc);
                if (audit) audit->delay(t);
                if (shared_mode)
                    f_sam->add_sample_atomic(inc);
                else
                    f_sam->add_sample(inc);
                if (audit) audit->on_sample(t, e_sam, inc);
                ++drawn;
                ++since_check;

                const std::uint64_t r = epoch_to_read.load(std::memory_order_relaxed);
                if (r == e_sam) {
                    StateFrame* next = &pairs[group][(e_sam + 1) & 1];
                    if (!shared_mode && next->epoch() != e_sam + 1) {
                        // Reclaim the pair's other frame (epoch e_sam - 1);
                        // thread 0 finished reading it before publishing
                        // epochToRead == e_sam.
                        next->recycle(e_sam + 1);
                    }
                    if (audit) audit->delay(t);
                    sf_fin[t].store(f_sam, std::memory_order_release);
                    if (audit) {
                        audit->on_publish(t, e_sam);
                        audit->delay(t);
                    }
                    ++e_sam;
                    f_sam = next;
                }
                if (t == 0) check_frames();
            }
        } catch (...) {
            detail::rethrow_first(error, error_mu, std::current_exception(), stop);
        }
        res.per_thread_samples[t] = drawn;
    };

    std::vector<std::thread> threads;
    threads.reserve(T);
    for (unsigned t = 0; t < T; ++t) threads.emplace_back(worker, t);
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
    if (!stop.load(std::memory_order_relaxed))
        throw std::logic_error("epoch engine exited without a stop decision");

    res.num = result_frame.num();
    res.data = result_frame.snapshot();
    for (auto s : res.per_thread_samples) res.total_samples += s;
    res.check_cycles = cycles;
    return res;
}

/// Deterministic engine. The run is a single conceptual stream of frames at
/// positions 0, 1, 2, ...; frame p holds exactly samples_per_frame samples
/// drawn from stream_rng(base_seed, p). By default thread t computes the
/// positions congruent to t mod T; with bounded_memory, blocks of positions
/// are claimed through reserve_indices instead. Thread 0 consumes finished
/// frames strictly in position order, folds them into a prefix accumulation
/// and evaluates the stopping condition after each frame, so (tau, data) is
/// a pure function of (base_seed, samples_per_frame, sampler) independent of
/// the thread count and of timing.
template <Sampler S>
RunResult run_indexed(const S& sampler, const EngineConfig& cfg, AuditSink* audit = nullptr) {
    cfg.validate();
    const unsigned T = cfg.threads;
    const std::size_t n = sampler.state_size();
    const std::uint64_t spf = cfg.samples_per_frame;

    struct Tagged {
        StateFrame* frame = nullptr;
        std::uint64_t position = 0;
        unsigned owner = 0;
    };

    std::vector<std::unique_ptr<detail::SpscQueue<Tagged>>> done(T);       // t -> thread 0
    std::vector<std::unique_ptr<detail::SpscQueue<StateFrame*>>> free_(T); // thread 0 -> t
    std::vector<std::vector<std::unique_ptr<StateFrame>>> arena(T);        // owner-appended
    for (unsigned t = 0; t < T; ++t) {
        done[t] = std::make_unique<detail::SpscQueue<Tagged>>();
        free_[t] = std::make_unique<detail::SpscQueue<StateFrame*>>();
    }
    std::vector<std::atomic<std::uint64_t>> produced(T);
    for (auto& p : produced) p.store(0, std::memory_order_relaxed);

    std::atomic<bool> stop{false};
    ReservationCounter reservations;

    RunResult res;
    res.per_thread_samples.assign(T, 0);
    std::exception_ptr error;
    std::mutex error_mu;

    // Thread 0's consumption state.
    std::map<std::uint64_t, Tagged> pending;
    std::vector<std::uint64_t> consumed_from(T, 0);
    std::uint64_t next_position = 0;
    StateFrame prefix(n, 0);
    StateFrame epoch_delta(n, 1);
    std::uint64_t cycles = 0;
    std::uint64_t depth_observations = 0;
    double depth_sum = 0.0;

    auto drain_and_consume = [&](const S& smp) {
        for (unsigned i = 0; i < T; ++i) {
            Tagged tf;
            while (done[i]->pop(tf)) pending.emplace(tf.position, tf);
        }
        for (unsigned i = 0; i < T; ++i) {
            const std::uint64_t depth =
                produced[i].load(std::memory_order_relaxed) - consumed_from[i];
            res.queue.max_depth = std::max(res.queue.max_depth, depth);
            if (depth > cfg.queue_high_water) res.queue.high_water_exceeded = true;
            depth_sum += static_cast<double>(depth);
            ++depth_observations;
        }
        while (!stop.load(std::memory_order_relaxed)) {
            auto it = pending.find(next_position);
            if (it == pending.end()) break;
            Tagged tf = it->second;
            pending.erase(it);
            ++consumed_from[tf.owner];
            prefix.accumulate(*tf.frame);
            if (audit) {
                epoch_delta.accumulate(*tf.frame);
                if ((next_position + 1) % T == 0) {
                    audit->on_check((next_position + 1) / T, epoch_delta);
                    epoch_delta.recycle((next_position + 1) / T + 1);
                }
            }
            free_[tf.owner]->push(tf.frame);
            ++next_position;
            ++cycles;
            if (smp.check_for_stop(prefix)) {
                res.stop_epoch = (next_position - 1) / T + 1;
                stop.store(true, std::memory_order_relaxed);
            }
        }
    };

    auto worker = [&](unsigned t) {
        auto scratch = sampler.make_scratch();
        std::vector<std::uint32_t> inc;
        std::uint64_t drawn = 0;
        std::uint64_t round_robin = 0;
        std::vector<std::uint64_t> block;
        std::size_t block_pos = 0;

        auto next_claim = [&]() -> std::uint64_t {
            if (!cfg.bounded_memory) return t + (round_robin++) * T;
            if (block_pos == block.size()) {
                block = reserve_indices(reservations, T, cfg.reservation_block);
                block_pos = 0;
            }
            return block[block_pos++];
        };

        try {
            while (!stop.load(std::memory_order_relaxed)) {
                const std::uint64_t position = next_claim();
                const std::uint64_t epoch = position / T + 1;
                StateFrame* frame = nullptr;
                if (!free_[t]->pop(frame)) {
                    arena[t].push_back(std::make_unique<StateFrame>(n));
                    frame = arena[t].back().get();
                }
                frame->recycle(epoch);
                SplitMix64 rng = stream_rng(cfg.base_seed, position);

                bool complete = true;
                for (std::uint64_t i = 0; i < spf; ++i) {
                    if (stop.load(std::memory_order_relaxed)) {
                        complete = false;
                        break;
                    }
                    inc.clear();
                    sampler.sample(scratch, rng, inc);
                    if (audit) audit->delay(t);
                    frame->add_sample(inc);
                    if (audit) audit->on_sample(t, epoch, inc);
                    ++drawn;
                    if (t == 0) drain_and_consume(sampler);
                }
                if (!complete) break; // partial frame stays in the arena
                if (audit) audit->delay(t);
                done[t]->push({frame, position, t});
                produced[t].fetch_add(1, std::memory_order_relaxed);
                if (audit) {
                    audit->on_publish(t, epoch);
                    audit->delay(t);
                }
                if (t == 0) drain_and_consume(sampler);
            }
        } catch (...) {
            detail::rethrow_first(error, error_mu, std::current_exception(), stop);
        }
        res.per_thread_samples[t] = drawn;
    };

    std::vector<std::thread> threads;
    threads.reserve(T);
    for (unsigned t = 0; t < T; ++t) threads.emplace_back(worker, t);
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
    if (!stop.load(std::memory_order_relaxed))
        throw std::logic_error("indexed engine exited without a stop decision");

    res.num = prefix.num();
    res.data = prefix.snapshot();
    for (auto s : res.per_thread_samples) res.total_samples += s;
    res.check_cycles = cycles;
    for (auto& a : arena) res.queue.allocated += a.size();
    res.queue.mean_depth =
        depth_observations == 0 ? 0.0 : depth_sum / static_cast<double>(depth_observations);
    return res;
}

/// Dispatch on the configured variant.
template <Sampler S>
RunResult run(const S& sampler, const EngineConfig& cfg, AuditSink* audit = nullptr) {
    switch (cfg.variant) {
        case Variant::sequential: return run_sequential(sampler, cfg, audit);
        case Variant::barrier: return run_barrier(sampler, cfg, audit);
        case Variant::local:
        case Variant::shared: return run_epoch(sampler, cfg, audit);
        case Variant::indexed: return run_indexed(sampler, cfg, audit);
    }
    throw std::invalid_argument("unknown variant");
}

} // namespace adsamp
