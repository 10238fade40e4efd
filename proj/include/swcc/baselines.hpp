#pragma once

#include <cstdint>
#include <deque>
#include <unordered_map>
#include <vector>

#include "swcc/driver.hpp"
#include "swcc/stream.hpp"
#include "swcc/union_find.hpp"

namespace swcc {

/// Recompute-window-connectivity: fresh union-find over exactly the window's
/// edges, queries answered by root comparison.
inline WindowResult rwc_evaluate_window(const std::vector<StreamingEdge>& edges,
                                        const Workload& workload,
                                        std::uint64_t window_start_slide = 0) {
    UnionFind uf;
    for (const auto& e : edges) {
        uf.unite(e.u, e.v);
    }
    WindowResult r{window_start_slide, {}};
    r.results.reserve(workload.pairs.size());
    for (const auto& [u, v] : workload.pairs) {
        auto ru = uf.find(u);
        auto rv = uf.find(v);
        r.results.push_back(ru && rv && *ru == *rv);
    }
    return r;
}

/// Iterative depth-first search from u over the window's edges; explicit
/// stack so deep components cannot blow the call stack.
inline bool dfs_query(const std::vector<StreamingEdge>& edges, VertexId u, VertexId v) {
    std::unordered_map<VertexId, std::vector<VertexId>> adj;
    for (const auto& e : edges) {
        adj[e.u].push_back(e.v);
        if (e.u != e.v) {
            adj[e.v].push_back(e.u);
        }
    }
    if (adj.find(u) == adj.end() || adj.find(v) == adj.end()) {
        return false;
    }
    if (u == v) {
        return true;
    }
    std::vector<VertexId> stack{u};
    std::unordered_map<VertexId, bool> visited{{u, true}};
    while (!stack.empty()) {
        VertexId cur = stack.back();
        stack.pop_back();
        for (VertexId next : adj.at(cur)) {
            if (next == v) {
                return true;
            }
            if (!visited[next]) {
                visited[next] = true;
                stack.push_back(next);
            }
        }
    }
    return false;
}

/// Ground truth for every full window of an in-memory stream: slices edges
/// by slide range and recomputes connectivity per window. Window w ends at
/// slide e (chunk_size-1 <= e <= last edge's slide) and spans the chunk_size
/// slides before it; empty windows still produce a result row.
inline std::vector<WindowResult> oracle_all_windows(const std::vector<StreamingEdge>& stream,
                                                    const WindowSpec& spec,
                                                    const Workload& workload) {
    std::vector<WindowResult> out;
    if (stream.empty()) {
        return out;
    }
    const std::uint64_t cs = spec.chunk_size();
    const std::uint64_t last_slide = spec.slide_of(stream.back().ts);
    if (last_slide + 1 < cs) {
        return out;
    }
    std::vector<std::uint64_t> slides(stream.size());
    for (std::size_t i = 0; i < stream.size(); ++i) {
        slides[i] = spec.slide_of(stream[i].ts);
    }
    UnionFind scratch;
    std::size_t lo = 0, hi = 0;
    for (std::uint64_t end = cs - 1; end <= last_slide; ++end) {
        std::uint64_t start = end + 1 - cs;
        while (hi < stream.size() && slides[hi] <= end) {
            ++hi;
        }
        while (lo < hi && slides[lo] < start) {
            ++lo;
        }
        scratch.clear();
        for (std::size_t i = lo; i < hi; ++i) {
            scratch.unite(stream[i].u, stream[i].v);
        }
        WindowResult r{start, {}};
        r.results.reserve(workload.pairs.size());
        for (const auto& [u, v] : workload.pairs) {
            auto ru = scratch.find(u);
            auto rv = scratch.find(v);
            r.results.push_back(ru && rv && *ru == *rv);
        }
        out.push_back(std::move(r));
    }
    return out;
}

/// Per-window work log for the recompute baseline, used to check that its
/// cost scales with window size while the incremental engine's does not.
struct RwcWindowStats {
    std::uint64_t window_edges = 0;
    std::uint64_t find_calls = 0;
    std::uint64_t hops = 0;
};

/// Streaming RWC baseline: retains the live window's edges and rebuilds a
/// union-find from scratch at every window completion.
class RwcEngine {
public:
    explicit RwcEngine(const WindowSpec& spec) : spec_(spec) {}

    void on_edge(VertexId u, VertexId v, ChunkCoord coord) {
        live_.push_back({global_slide(coord, spec_.chunk_size()), u, v});
    }

    WindowResult evaluate_window(std::uint64_t start_slide, std::uint64_t end_slide,
                                 const Workload& workload) {
        (void)end_slide;
        while (!live_.empty() && live_.front().slide < start_slide) {
            live_.pop_front();
        }
        scratch_.clear();
        OpCounters before = scratch_.ops();
        for (const auto& e : live_) {
            scratch_.unite(e.u, e.v);
        }
        WindowResult r{start_slide, {}};
        r.results.reserve(workload.pairs.size());
        for (const auto& [u, v] : workload.pairs) {
            auto ru = scratch_.find(u);
            auto rv = scratch_.find(v);
            r.results.push_back(ru && rv && *ru == *rv);
        }
        OpCounters after = scratch_.ops();
        window_stats_.push_back({live_.size(), after.find_calls - before.find_calls,
                                 after.hops - before.hops});
        return r;
    }

    void rollover(bool) {}

    MemoryCounters memory_counters() const {
        MemoryCounters m;
        m.forward_nodes = scratch_.vertex_count();
        m.chunk_edges_stored = live_.size();
        return m;
    }

    OpCounters total_ops() const { return scratch_.ops(); }
    const std::vector<RwcWindowStats>& window_stats() const { return window_stats_; }

private:
    struct LiveEdge {
        std::uint64_t slide;
        VertexId u, v;
    };

    WindowSpec spec_;
    std::deque<LiveEdge> live_;
    UnionFind scratch_;
    std::vector<RwcWindowStats> window_stats_;
};

/// Streaming DFS baseline: maintains the live window's adjacency and runs
/// one traversal per query per window.
class DfsEngine {
public:
    explicit DfsEngine(const WindowSpec& spec) : spec_(spec) {}

    void on_edge(VertexId u, VertexId v, ChunkCoord coord) {
        live_.push_back({global_slide(coord, spec_.chunk_size()), u, v});
        add_adj(u, v);
    }

    WindowResult evaluate_window(std::uint64_t start_slide, std::uint64_t end_slide,
                                 const Workload& workload) {
        (void)end_slide;
        while (!live_.empty() && live_.front().slide < start_slide) {
            remove_adj(live_.front().u, live_.front().v);
            live_.pop_front();
        }
        WindowResult r{start_slide, {}};
        r.results.reserve(workload.pairs.size());
        for (const auto& [u, v] : workload.pairs) {
            r.results.push_back(traverse(u, v));
        }
        return r;
    }

    void rollover(bool) {}

    MemoryCounters memory_counters() const {
        MemoryCounters m;
        m.forward_nodes = adj_.size();
        m.chunk_edges_stored = live_.size();
        return m;
    }

private:
    struct LiveEdge {
        std::uint64_t slide;
        VertexId u, v;
    };

    void add_adj(VertexId u, VertexId v) {
        ++adj_[u][v];
        if (u != v) {
            ++adj_[v][u];
        }
    }

    void remove_adj(VertexId u, VertexId v) {
        drop_half(u, v);
        if (u != v) {
            drop_half(v, u);
        }
    }

    void drop_half(VertexId a, VertexId b) {
        auto it = adj_.find(a);
        auto jt = it->second.find(b);
        if (--jt->second == 0) {
            it->second.erase(jt);
        }
        if (it->second.empty()) {
            adj_.erase(it);
        }
    }

    bool traverse(VertexId u, VertexId v) const {
        if (adj_.find(u) == adj_.end() || adj_.find(v) == adj_.end()) {
            return false;
        }
        if (u == v) {
            return true;
        }
        std::vector<VertexId> stack{u};
        std::unordered_map<VertexId, bool> visited{{u, true}};
        while (!stack.empty()) {
            VertexId cur = stack.back();
            stack.pop_back();
            for (const auto& [next, mult] : adj_.at(cur)) {
                if (next == v) {
                    return true;
                }
                if (!visited[next]) {
                    visited[next] = true;
                    stack.push_back(next);
                }
            }
        }
        return false;
    }

    WindowSpec spec_;
    std::deque<LiveEdge> live_;
    std::unordered_map<VertexId, std::unordered_map<VertexId, std::uint32_t>> adj_;
};

} // namespace swcc
