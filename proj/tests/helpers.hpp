#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "swcc/generator.hpp"
#include "swcc/stream.hpp"
#include "swcc/union_find.hpp"

namespace swcc::testing {

// Canonical worked stream: the 13-vertex example whose two chunks exercise
// every structure. Letters map to ids A=1 .. M=13 (J unused).
inline constexpr VertexId A = 1, B = 2, C = 3, D = 4, E = 5, F = 6, G = 7, H = 8, I = 9, K = 11,
                          L = 12, M = 13;

// alpha=5, beta=1, chunk size 5; slides 0..9 cover two full chunks.
inline std::vector<StreamingEdge> worked_example_stream() {
    return {
        {G, H, 0},
        {F, G, 1},
        {B, D, 2},
        {B, C, 3},
        {B, E, 3},
        {A, D, 4},
        {A, F, 4},
        {A, D, 5},
        {D, I, 5},
        {D, G, 5},
        {A, I, 6},
        {K, L, 6},
        {K, C, 6},
        {B, C, 6},
        {L, M, 7},
        {I, L, 8},
        {M, I, 9},
    };
}

inline ChunkStore chunk_of(const std::vector<StreamingEdge>& stream, const WindowSpec& spec,
                           std::uint64_t chunk_index) {
    ChunkStore c(spec.chunk_size());
    for (const auto& e : stream) {
        ChunkCoord cc = chunk_coord(spec.slide_of(e.ts), spec.chunk_size());
        if (cc.chunk_index == chunk_index) {
            c.add(cc.offset, e.u, e.v);
        }
    }
    return c;
}

// Independent component labeling by iterative depth-first search.
inline std::unordered_map<VertexId, std::uint64_t> dfs_component_labels(
    const std::vector<std::pair<VertexId, VertexId>>& edges) {
    std::unordered_map<VertexId, std::vector<VertexId>> adj;
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        if (u != v) {
            adj[v].push_back(u);
        }
    }
    std::unordered_map<VertexId, std::uint64_t> label;
    std::uint64_t next_label = 0;
    for (const auto& [start, _] : adj) {
        if (label.count(start)) {
            continue;
        }
        std::uint64_t l = next_label++;
        std::vector<VertexId> stack{start};
        label[start] = l;
        while (!stack.empty()) {
            VertexId cur = stack.back();
            stack.pop_back();
            for (VertexId nxt : adj.at(cur)) {
                if (!label.count(nxt)) {
                    label[nxt] = l;
                    stack.push_back(nxt);
                }
            }
        }
    }
    return label;
}

// Snapshot b[j] rebuilt from scratch: a fresh union-find fed the chunk's
// slides from chunk_size-1 down to j, mirroring the insertion order (and
// tie-breaks) of the incremental build, so roots match identically.
inline UnionFind rebuild_backward_snapshot(const ChunkStore& chunk, std::uint64_t j) {
    UnionFind uf;
    for (std::uint64_t s = chunk.chunk_size(); s-- > j;) {
        for (const auto& [u, v] : chunk.slide(s)) {
            uf.unite(u, v);
        }
    }
    return uf;
}

// Forward snapshot f[t]: slides 0..t in order.
inline UnionFind rebuild_forward_snapshot(const ChunkStore& chunk, std::uint64_t t) {
    UnionFind uf;
    for (std::uint64_t s = 0; s <= t; ++s) {
        for (const auto& [u, v] : chunk.slide(s)) {
            uf.unite(u, v);
        }
    }
    return uf;
}

// Random chunk with clustered endpoints so unions actually chain.
inline ChunkStore random_chunk(SplitMix64& rng, std::uint64_t chunk_size, std::uint64_t max_edges,
                               std::uint64_t vertex_range) {
    ChunkStore c(chunk_size);
    std::uint64_t edges = rng.below(max_edges + 1);
    for (std::uint64_t i = 0; i < edges; ++i) {
        std::uint64_t offset = rng.below(chunk_size);
        VertexId u = 1 + rng.below(vertex_range);
        VertexId v = 1 + rng.below(vertex_range);
        c.add(offset, u, v);
    }
    return c;
}

inline std::vector<std::pair<VertexId, VertexId>> chunk_edges_from(const ChunkStore& chunk,
                                                                   std::uint64_t first_offset) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (std::uint64_t s = first_offset; s < chunk.chunk_size(); ++s) {
        for (const auto& e : chunk.slide(s)) {
            out.push_back(e);
        }
    }
    return out;
}

} // namespace swcc::testing
