#pragma once

// Betweenness-centrality approximation by uniform shortest-path sampling.
//
// Each sample draws an ordered vertex pair (s, t) uniformly at random and,
// if the two are connected, selects one shortest s-t path uniformly among
// all of them; the path's internal vertices each receive one count. After
// tau samples the estimate is b(v) = data[v] / tau, and sampling stops once
// the per-vertex confidence widths f and g drop below epsilon for every
// vertex, or once the sample budget omega is exhausted.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "adsamp/engine.hpp"
#include "adsamp/frame.hpp"
#include "adsamp/graph.hpp"
#include "adsamp/rng.hpp"

namespace adsamp::kadabra {

/// Uniform per-vertex failure-probability split: delta_L(v) = delta_U(v) =
/// delta / (2n), which spends the full budget (sum equals delta).
inline std::pair<std::vector<double>, std::vector<double>> allocate_deltas(std::size_t n,
                                                                           double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("delta must lie in (0,1)");
    const double each = delta / (2.0 * static_cast<double>(n));
    return {std::vector<double>(n, each), std::vector<double>(n, each)};
}

/// Maximal number of samples needed for the +-epsilon guarantee, driven by
/// the vertex diameter VD = diameter_bound + 1:
///   omega = ceil( (c / eps^2) * (floor(log2(max(VD-2, 2))) + 1 + ln(1/delta)) )
inline std::uint64_t compute_omega(std::uint64_t diameter_bound, double epsilon, double delta,
                                   double c = 0.5) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in (0,1)");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("delta must lie in (0,1)");
    const std::uint64_t vertex_diameter = diameter_bound + 1;
    const std::uint64_t arg = vertex_diameter > 4 ? vertex_diameter - 2 : 2;
    const auto log2_floor = static_cast<double>(std::bit_width(arg) - 1);
    const double value =
        (c / (epsilon * epsilon)) * (log2_floor + 1.0 + std::log(1.0 / delta));
    return static_cast<std::uint64_t>(std::ceil(value));
}

namespace detail {

// Confidence-width kernels; preconditions are enforced by the public
// wrappers and by parameter construction. log_inv is ln(1/delta).
inline double f_kernel(double b, double log_inv, double omega, double tau) noexcept {
    const double t = 1.0 / 3.0 - omega / tau;
    return (log_inv / tau) * (t + std::sqrt(t * t + 2.0 * b * omega / log_inv));
}

inline double g_kernel(double b, double log_inv, double omega, double tau) noexcept {
    const double t = 1.0 / 3.0 + omega / tau;
    return (log_inv / tau) * (t + std::sqrt(t * t + 2.0 * b * omega / log_inv));
}

inline void check_bound_domain(double b_tilde, double delta_v, std::uint64_t tau) {
    if (tau < 1) throw std::domain_error("tau must be >= 1");
    if (!(delta_v > 0.0 && delta_v < 1.0))
        throw std::domain_error("per-vertex delta must lie in (0,1)");
    if (!(b_tilde >= 0.0 && b_tilde <= 1.0))
        throw std::domain_error("b_tilde must lie in [0,1]");
}

} // namespace detail

/// Lower confidence width f(b, delta_L, omega, tau).
inline double f_bound(double b_tilde, double delta_l, std::uint64_t omega, std::uint64_t tau) {
    detail::check_bound_domain(b_tilde, delta_l, tau);
    return detail::f_kernel(b_tilde, std::log(1.0 / delta_l), static_cast<double>(omega),
                            static_cast<double>(tau));
}

/// Upper confidence width g(b, delta_U, omega, tau).
inline double g_bound(double b_tilde, double delta_u, std::uint64_t omega, std::uint64_t tau) {
    detail::check_bound_domain(b_tilde, delta_u, tau);
    return detail::g_kernel(b_tilde, std::log(1.0 / delta_u), static_cast<double>(omega),
                            static_cast<double>(tau));
}

struct KadabraParams {
    double epsilon = 0.01;
    double delta = 0.1;
    double c = 0.5;                    // omega constant
    std::uint64_t omega = 0;
    std::uint64_t diameter_bound = 0;
    std::uint64_t check_interval = 1000; // N
    double latency_exponent = 1.33;      // xi
    std::vector<double> delta_l, delta_u;
    std::vector<double> log_inv_delta_l, log_inv_delta_u; // cached ln(1/delta)

    static KadabraParams for_graph(const Graph& g, double epsilon, double delta,
                                   double c = 0.5, std::uint64_t check_interval = 1000,
                                   double latency_exponent = 1.33) {
        KadabraParams p;
        p.epsilon = epsilon;
        p.delta = delta;
        p.c = c;
        p.check_interval = check_interval;
        p.latency_exponent = latency_exponent;
        p.diameter_bound = diameter_upper_bound(g);
        p.omega = compute_omega(p.diameter_bound, epsilon, delta, c);
        std::tie(p.delta_l, p.delta_u) = allocate_deltas(g.num_vertices(), delta);
        p.cache_logs();
        return p;
    }

    void cache_logs() {
        auto fill = [](const std::vector<double>& deltas, std::vector<double>& out) {
            out.resize(deltas.size());
            for (std::size_t v = 0; v < deltas.size(); ++v) out[v] = std::log(1.0 / deltas[v]);
        };
        fill(delta_l, log_inv_delta_l);
        fill(delta_u, log_inv_delta_u);
    }
};

/// True iff f and g are both <= epsilon for every vertex at the given
/// accumulated state (the formula part of the stopping rule, without the
/// omega cap).
inline bool kadabra_converged(const StateFrame& frame, const KadabraParams& p) {
    const auto tau = frame.num();
    if (tau < 1) throw std::domain_error("stopping check needs at least one sample");
    const auto omega = static_cast<double>(p.omega);
    const auto tau_d = static_cast<double>(tau);
    for (std::size_t v = 0; v < frame.size(); ++v) {
        const double b = static_cast<double>(frame.data(v)) / tau_d;
        if (detail::f_kernel(b, p.log_inv_delta_l[v], omega, tau_d) > p.epsilon) return false;
        if (detail::g_kernel(b, p.log_inv_delta_u[v], omega, tau_d) > p.epsilon) return false;
    }
    return true;
}

/// Stopping rule: the sample budget omega is exhausted, or every vertex has
/// converged to within epsilon.
inline bool kadabra_check(const StateFrame& frame, const KadabraParams& p) {
    if (frame.num() >= p.omega) return true;
    return kadabra_converged(frame, p);
}

/// Per-thread traversal state. The visited set is kept as 7-bit timestamps
/// with period 128: a vertex counts as touched in the current traversal iff
/// its stamp equals the traversal's stamp, and the array is fully reset
/// exactly every 128 traversals.
class PathScratch {
public:
    explicit PathScratch(std::size_t n)
        : dist_(n, 0), sigma_(n, 0), stamp_(n, kNever), queue_() {
        queue_.reserve(n);
    }

    void begin_traversal() noexcept {
        if (traversals_ % 128 == 0) std::fill(stamp_.begin(), stamp_.end(), kNever);
        current_ = static_cast<std::uint8_t>(traversals_ & 127);
        ++traversals_;
    }

    bool visited(std::uint32_t v) const noexcept { return stamp_[v] == current_; }
    void touch(std::uint32_t v) noexcept { stamp_[v] = current_; }

    std::uint64_t traversals() const noexcept { return traversals_; }

    std::vector<std::uint32_t> dist_;
    std::vector<std::uint64_t> sigma_;
    std::vector<std::uint32_t> queue_;

private:
    static constexpr std::uint8_t kNever = 0xFF; // outside the 7-bit stamp range
    std::vector<std::uint8_t> stamp_;
    std::uint8_t current_ = 0;
    std::uint64_t traversals_ = 0;
};

/// One uniformly random shortest s-t path, its internal vertices appended to
/// `out`. Every shortest path is selected with probability exactly
/// 1/sigma_st via sigma-weighted backtracking over the distance vector.
/// Returns false (and appends nothing) when t is unreachable from s.
inline bool sample_path_between(const Graph& g, PathScratch& scratch, SplitMix64& rng,
                                std::uint32_t s, std::uint32_t t,
                                std::vector<std::uint32_t>& out) {
    scratch.begin_traversal();
    auto& dist = scratch.dist_;
    auto& sigma = scratch.sigma_;
    auto& queue = scratch.queue_;
    queue.clear();

    scratch.touch(s);
    dist[s] = 0;
    sigma[s] = 1;
    queue.push_back(s);
    std::uint32_t t_dist = UINT32_MAX;

    // BFS from s counting shortest paths; expansion stops once the level of
    // t is fully settled, at which point sigma is final for all vertices at
    // distance <= dist(t).
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t u = queue[head];
        if (dist[u] >= t_dist) break;
        for (const std::uint32_t v : g.neighbors(u)) {
            if (!scratch.visited(v)) {
                scratch.touch(v);
                dist[v] = dist[u] + 1;
                sigma[v] = sigma[u];
                queue.push_back(v);
                if (v == t) t_dist = dist[v];
            } else if (dist[v] == dist[u] + 1) {
                sigma[v] += sigma[u];
            }
        }
    }
    if (!scratch.visited(t)) return false;

    // Walk backward from t, picking each predecessor p with probability
    // sigma[p] / sigma[cur]; the predecessors' sigmas sum to sigma[cur].
    std::uint32_t cur = t;
    while (dist[cur] > 1) {
        std::uint64_t r = rng.next_below(sigma[cur]);
        std::uint32_t chosen = UINT32_MAX;
        for (const std::uint32_t p : g.neighbors(cur)) {
            if (scratch.visited(p) && dist[p] + 1 == dist[cur]) {
                if (r < sigma[p]) {
                    chosen = p;
                    break;
                }
                r -= sigma[p];
            }
        }
        cur = chosen;
        out.push_back(cur);
    }
    return true;
}

/// Draw one sample: (s, t) uniform over ordered pairs with s != t, then one
/// uniformly random shortest s-t path. A pair in different components
/// contributes nothing but still counts as a sample; the component check
/// avoids the wasted traversal.
inline void sample_path(const Graph& g, const ComponentLabels& components, PathScratch& scratch,
                        SplitMix64& rng, std::vector<std::uint32_t>& out) {
    const std::uint32_t n = g.num_vertices();
    const auto s = static_cast<std::uint32_t>(rng.next_below(n));
    auto t = static_cast<std::uint32_t>(rng.next_below(n - 1));
    if (t >= s) ++t;
    if (!components.same_component(s, t)) return;
    sample_path_between(g, scratch, rng, s, t, out);
}

/// Sampler plugged into the engine: shares the graph read-only, keeps all
/// mutable traversal state in the per-thread scratch.
class Sampler {
public:
    using Scratch = PathScratch;

    Sampler(const Graph& g, const ComponentLabels& components, const KadabraParams& params)
        : graph_(g), components_(components), params_(params) {}

    std::size_t state_size() const noexcept { return graph_.num_vertices(); }
    Scratch make_scratch() const { return PathScratch(graph_.num_vertices()); }

    void sample(Scratch& scratch, SplitMix64& rng, std::vector<std::uint32_t>& out) const {
        sample_path(graph_, components_, scratch, rng, out);
    }

    bool check_for_stop(const StateFrame& accumulated) const {
        if (accumulated.num() == 0) return false;
        return kadabra_check(accumulated, params_);
    }

    const KadabraParams& params() const noexcept { return params_; }

private:
    const Graph& graph_;
    const ComponentLabels& components_;
    const KadabraParams& params_;
};

enum class StopReason { eps_converged, omega_reached };

inline const char* to_string(StopReason r) {
    return r == StopReason::eps_converged ? "eps_converged" : "omega_reached";
}

struct BcResult {
    std::vector<double> scores; // b(v) in [0,1]
    std::uint64_t tau = 0;
    StopReason reason = StopReason::eps_converged;
    std::uint64_t omega = 0;
    std::uint64_t diameter_bound = 0;
    double preprocess_seconds = 0.0;
    double ads_seconds = 0.0;
    RunResult run;
};

/// Full pipeline: preprocessing (components, diameter bound, omega, delta
/// allocation), then the configured engine variant with the path sampler.
inline BcResult estimate_bc(const Graph& g, double epsilon, double delta,
                            const EngineConfig& config, AuditSink* audit = nullptr) {
    if (g.num_vertices() == 0) throw std::invalid_argument("graph has no vertices");
    using clock = std::chrono::steady_clock;

    BcResult result;
    if (g.num_vertices() == 1) {
        result.scores = {0.0};
        return result;
    }

    const auto t0 = clock::now();
    const ComponentLabels components = connected_components(g);
    KadabraParams params = KadabraParams::for_graph(g, epsilon, delta, 0.5,
                                                    config.check_interval,
                                                    config.latency_exponent);
    Sampler sampler(g, components, params);
    const auto t1 = clock::now();

    result.run = run(sampler, config, audit);
    const auto t2 = clock::now();

    result.tau = result.run.num;
    result.omega = params.omega;
    result.diameter_bound = params.diameter_bound;
    result.scores.resize(g.num_vertices());
    for (std::size_t v = 0; v < result.scores.size(); ++v)
        result.scores[v] =
            result.tau == 0 ? 0.0
                            : static_cast<double>(result.run.data[v]) / static_cast<double>(result.tau);

    result.reason = StopReason::omega_reached;
    if (result.tau >= 1) {
        const StateFrame final_state = StateFrame::from_counts(result.run.data, result.tau);
        if (kadabra_converged(final_state, params)) result.reason = StopReason::eps_converged;
    }

    result.preprocess_seconds = std::chrono::duration<double>(t1 - t0).count();
    result.ads_seconds = std::chrono::duration<double>(t2 - t1).count();
    return result;
}

} // namespace adsamp::kadabra
