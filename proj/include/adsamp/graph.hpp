#pragma once

// Compact read-only graph representation plus the preprocessing primitives
// the samplers need (connected components, diameter upper bound).
//
// Construction is single-threaded; afterwards a Graph is immutable and safe
// for unsynchronized concurrent reads.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace adsamp {

using VertexId = std::uint32_t;

/// Undirected graph in compressed adjacency (CSR) form. Vertex ids are dense
/// [0, n); offsets has n+1 entries; neighbors holds both directions of every
/// edge. No self-loops, no duplicate entries within a vertex's range.
class Graph {
public:
    Graph() = default;

    /// Build from an undirected edge list over dense ids. Self-loops are
    /// dropped and duplicate edges collapsed.
    static Graph from_edges(VertexId num_vertices,
                            std::span<const std::pair<VertexId, VertexId>> edges) {
        Graph g;
        g.n_ = num_vertices;
        std::vector<std::pair<VertexId, VertexId>> dir;
        dir.reserve(edges.size() * 2);
        for (auto [u, v] : edges) {
            if (u == v) continue;
            if (u >= num_vertices || v >= num_vertices)
                throw std::invalid_argument("edge endpoint out of range");
            dir.emplace_back(u, v);
            dir.emplace_back(v, u);
        }
        std::sort(dir.begin(), dir.end());
        dir.erase(std::unique(dir.begin(), dir.end()), dir.end());

        g.offsets_.assign(num_vertices + 1, 0);
        for (auto [u, v] : dir) g.offsets_[u + 1]++;
        for (VertexId u = 0; u < num_vertices; ++u) g.offsets_[u + 1] += g.offsets_[u];
        g.neighbors_.resize(dir.size());
        std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
        for (auto [u, v] : dir) g.neighbors_[cursor[u]++] = v;
        return g;
    }

    VertexId num_vertices() const noexcept { return n_; }
    std::uint64_t num_edges() const noexcept { return neighbors_.size() / 2; }

    std::span<const VertexId> neighbors(VertexId u) const noexcept {
        return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
    }

    std::uint64_t degree(VertexId u) const noexcept { return offsets_[u + 1] - offsets_[u]; }

    const std::vector<std::uint64_t>& offsets() const noexcept { return offsets_; }
    const std::vector<VertexId>& neighbor_list() const noexcept { return neighbors_; }

private:
    VertexId n_ = 0;
    std::vector<std::uint64_t> offsets_;   // n+1, non-decreasing, offsets_[0] == 0
    std::vector<VertexId> neighbors_;      // 2m
};

/// Original-id table kept by the parser so results can be reported against
/// the input's vertex names.
struct ParsedGraph {
    Graph graph;
    std::vector<std::uint64_t> original_ids; // dense id -> id as it appeared in the file
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parse a whitespace-separated edge list. Lines starting with '%' or '#'
/// are comments; each other non-empty line holds two non-negative integer
/// ids (up to 2^32-1). Ids are remapped to [0, n) in first-appearance order;
/// self-loops are dropped and duplicate edges collapsed.
inline ParsedGraph parse_edge_list(std::istream& in) {
    std::unordered_map<std::uint64_t, VertexId> remap;
    std::vector<std::uint64_t> original_ids;
    std::vector<std::pair<VertexId, VertexId>> edges;

    auto intern = [&](std::uint64_t id) {
        auto [it, inserted] = remap.try_emplace(id, static_cast<VertexId>(original_ids.size()));
        if (inserted) original_ids.push_back(id);
        return it->second;
    };

    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '%' || line[first] == '#') continue;

        std::istringstream ls(line);
        std::uint64_t a = 0, b = 0;
        if (!(ls >> a >> b))
            throw ParseError("line " + std::to_string(line_no) + ": expected two vertex ids");
        std::string rest;
        if (ls >> rest)
            throw ParseError("line " + std::to_string(line_no) + ": trailing token '" + rest + "'");
        if (a > 0xFFFFFFFFull || b > 0xFFFFFFFFull)
            throw ParseError("line " + std::to_string(line_no) + ": vertex id exceeds 2^32-1");
        const VertexId da = intern(a); // interning order fixes the dense numbering
        const VertexId db = intern(b);
        edges.emplace_back(da, db);
    }
    if (original_ids.empty()) throw ParseError("no vertices found in edge list");

    ParsedGraph out;
    out.graph = Graph::from_edges(static_cast<VertexId>(original_ids.size()), edges);
    out.original_ids = std::move(original_ids);
    return out;
}

inline ParsedGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

/// Write the graph back as an edge list over dense ids, one "u v" line per
/// undirected edge (u < v).
inline void serialize_edge_list(const Graph& g, std::ostream& out) {
    for (VertexId u = 0; u < g.num_vertices(); ++u)
        for (VertexId v : g.neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
}

struct ComponentLabels {
    std::vector<VertexId> label;  // per vertex, in [0, num_components)
    VertexId num_components = 0;

    bool same_component(VertexId u, VertexId v) const noexcept { return label[u] == label[v]; }
};

inline ComponentLabels connected_components(const Graph& g) {
    const VertexId n = g.num_vertices();
    ComponentLabels cc;
    cc.label.assign(n, n); // n = unvisited sentinel
    std::vector<VertexId> queue;
    for (VertexId s = 0; s < n; ++s) {
        if (cc.label[s] != n) continue;
        const VertexId c = cc.num_components++;
        cc.label[s] = c;
        queue.assign(1, s);
        while (!queue.empty()) {
            VertexId u = queue.back();
            queue.pop_back();
            for (VertexId v : g.neighbors(u)) {
                if (cc.label[v] == n) {
                    cc.label[v] = c;
                    queue.push_back(v);
                }
            }
        }
    }
    return cc;
}

/// Eccentricity of `source` within its component (max BFS distance).
inline std::uint64_t eccentricity(const Graph& g, VertexId source) {
    std::vector<std::uint32_t> dist(g.num_vertices(), UINT32_MAX);
    std::vector<VertexId> frontier{source}, next;
    dist[source] = 0;
    std::uint64_t ecc = 0;
    while (!frontier.empty()) {
        next.clear();
        for (VertexId u : frontier) {
            for (VertexId v : g.neighbors(u)) {
                if (dist[v] == UINT32_MAX) {
                    dist[v] = dist[u] + 1;
                    ecc = dist[v];
                    next.push_back(v);
                }
            }
        }
        frontier.swap(next);
    }
    return ecc;
}

/// Upper bound on the diameter of every component: one BFS from a
/// maximum-degree vertex per component (lowest id on ties), bound 2*ecc,
/// maximum over components. Isolated vertices contribute 0.
inline std::uint64_t diameter_upper_bound(const Graph& g) {
    const auto cc = connected_components(g);
    const VertexId n = g.num_vertices();
    std::vector<VertexId> start(cc.num_components, n);
    for (VertexId u = 0; u < n; ++u) {
        VertexId& s = start[cc.label[u]];
        if (s == n || g.degree(u) > g.degree(s)) s = u;
    }
    std::uint64_t bound = 0;
    for (VertexId s : start)
        bound = std::max(bound, 2 * eccentricity(g, s));
    return bound;
}

} // namespace adsamp
