#pragma once

// State frames: one epoch's worth of sampled data for one thread (or one
// group of threads). A frame is written by its producer(s) during exactly one
// epoch, published once through a release store, and never modified again
// until it is reclaimed.
//
// Cells are atomics so that the shared-frame engine can accumulate with
// fetch-add; exclusive writers use relaxed load/store pairs, which compile to
// plain moves. Cross-thread visibility of a finished frame rests solely on
// the release/acquire pair around its publication, never on the cell
// orderings themselves.

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace adsamp {

class StateFrame {
public:
    StateFrame() = default;

    explicit StateFrame(std::size_t n, std::uint64_t epoch = 0) { reset(n, epoch); }

    StateFrame(StateFrame&& other) noexcept
        : n_(other.n_),
          epoch_(other.epoch_),
          num_(other.num_.load(std::memory_order_relaxed)),
          data_(std::move(other.data_)) {
        other.n_ = 0;
    }

    StateFrame& operator=(StateFrame&& other) noexcept {
        n_ = other.n_;
        epoch_ = other.epoch_;
        num_.store(other.num_.load(std::memory_order_relaxed), std::memory_order_relaxed);
        data_ = std::move(other.data_);
        other.n_ = 0;
        return *this;
    }

    void reset(std::size_t n, std::uint64_t epoch) {
        n_ = n;
        epoch_ = epoch;
        num_.store(0, std::memory_order_relaxed);
        data_ = std::make_unique<std::atomic<std::uint64_t>[]>(n);
        for (std::size_t v = 0; v < n; ++v) data_[v].store(0, std::memory_order_relaxed);
    }

    /// Zero the counters and relabel; the allocation is reused. Only valid
    /// once no other thread can read or write the frame.
    void recycle(std::uint64_t epoch) {
        epoch_ = epoch;
        num_.store(0, std::memory_order_relaxed);
        for (std::size_t v = 0; v < n_; ++v) data_[v].store(0, std::memory_order_relaxed);
    }

    std::uint64_t epoch() const noexcept { return epoch_; }
    void set_epoch(std::uint64_t e) noexcept { epoch_ = e; }

    std::size_t size() const noexcept { return n_; }

    std::uint64_t num() const noexcept { return num_.load(std::memory_order_relaxed); }
    std::uint64_t data(std::size_t v) const noexcept {
        return data_[v].load(std::memory_order_relaxed);
    }

    /// Record one sample's sparse increments. Exclusive flavor: the calling
    /// thread is the only writer of this frame during the current epoch.
    void add_sample(std::span<const std::uint32_t> increments) noexcept {
        for (std::uint32_t v : increments) {
            auto& cell = data_[v];
            cell.store(cell.load(std::memory_order_relaxed) + 1, std::memory_order_relaxed);
        }
        num_.store(num_.load(std::memory_order_relaxed) + 1, std::memory_order_relaxed);
    }

    /// Shared flavor: several threads write the same frame concurrently.
    void add_sample_atomic(std::span<const std::uint32_t> increments) noexcept {
        for (std::uint32_t v : increments)
            data_[v].fetch_add(1, std::memory_order_relaxed);
        num_.fetch_add(1, std::memory_order_relaxed);
    }

    /// Fold another frame into this one (single-threaded accumulation).
    void accumulate(const StateFrame& f) noexcept {
        for (std::size_t v = 0; v < n_; ++v) {
            auto& cell = data_[v];
            cell.store(cell.load(std::memory_order_relaxed) +
                           f.data_[v].load(std::memory_order_relaxed),
                       std::memory_order_relaxed);
        }
        num_.store(num_.load(std::memory_order_relaxed) + f.num(), std::memory_order_relaxed);
    }

    std::vector<std::uint64_t> snapshot() const {
        std::vector<std::uint64_t> out(n_);
        for (std::size_t v = 0; v < n_; ++v) out[v] = data(v);
        return out;
    }

    static StateFrame from_counts(std::span<const std::uint64_t> data, std::uint64_t num,
                                  std::uint64_t epoch = 0) {
        StateFrame f(data.size(), epoch);
        for (std::size_t v = 0; v < data.size(); ++v)
            f.data_[v].store(data[v], std::memory_order_relaxed);
        f.num_.store(num, std::memory_order_relaxed);
        return f;
    }

private:
    std::size_t n_ = 0;
    std::uint64_t epoch_ = 0;
    std::atomic<std::uint64_t> num_{0};
    std::unique_ptr<std::atomic<std::uint64_t>[]> data_;
};

/// Accumulate a set of published frames into a fresh frame, exactly as the
/// stopping-condition check does. Order-independent: the fold is elementwise
/// addition.
inline StateFrame accumulate_frames(std::span<const StateFrame* const> frames, std::size_t n,
                                    std::uint64_t epoch = 0) {
    StateFrame acc(n, epoch);
    for (const StateFrame* f : frames) acc.accumulate(*f);
    return acc;
}

} // namespace adsamp
