#pragma once

#include <cstdint>
#include <optional>

#include <absl/container/flat_hash_set.h>

#include "swcc/backward_auft.hpp"
#include "swcc/bfbg.hpp"
#include "swcc/driver.hpp"
#include "swcc/stream.hpp"
#include "swcc/union_find.hpp"

namespace swcc {

/// Sliding-window connectivity engine built on bidirectional incremental
/// computation: a forward union-find over the open chunk, the previous
/// chunk's snapshot-isolated backward forest, and a bipartite graph linking
/// their roots through shared vertices.
///
/// A window ending at chunk i+1 offset t pairs backward snapshot j = t+1 of
/// chunk i with forward snapshot t of chunk i+1. Windows aligned to a chunk
/// boundary are answered from that chunk's forward buffer alone. Nothing is
/// ever deleted from a live structure; everything is reset wholesale when a
/// chunk closes.
class BicEngine {
public:
    explicit BicEngine(const WindowSpec& spec)
        : chunk_size_(spec.chunk_size()), open_chunk_(chunk_size_) {}

    void on_edge(VertexId u, VertexId v, ChunkCoord coord) {
        // Union first, so inter-vertex registration sees post-union roots.
        if (auto link = forward_.unite(u, v)) {
            bfbg_.move_forward_root(link->child_root, link->parent_root);
        }
        // The last offset pairs with no backward snapshot.
        if (prev_backward_ && coord.offset + 1 < chunk_size_) {
            std::uint64_t j = coord.offset + 1;
            process_vertex(u, j);
            process_vertex(v, j);
        }
        open_chunk_.add(coord.offset, u, v);
    }

    /// Registers v's cross-buffer connectivity if it lives in both buffers.
    /// A vertex is examined once per chunk pairing: the spans emitted at its
    /// first qualifying snapshot already cover every later one, and a vertex
    /// absent from b[j] stays absent from every b[j'], j' > j.
    void process_vertex(VertexId v, std::uint64_t j) {
        if (!processed_.insert(v).second) {
            return;
        }
        if (!prev_backward_->contains_at(v, j) || !forward_.contains(v)) {
            return;
        }
        VertexId vf = *forward_.find(v);
        for (const auto& e : prev_backward_->compute_edges_and_intervals(j, v, vf)) {
            bfbg_.insert(e);
        }
    }

    WindowResult evaluate_window(std::uint64_t start_slide, std::uint64_t end_slide,
                                 const Workload& workload) {
        ChunkCoord c = chunk_coord(end_slide, chunk_size_);
        std::uint64_t j = c.offset + 1 == chunk_size_ ? 0 : c.offset + 1;
        WindowResult r{start_slide, {}};
        r.results.reserve(workload.pairs.size());
        for (const auto& [u, v] : workload.pairs) {
            r.results.push_back(query(u, v, j));
        }
        return r;
    }

    /// Connectivity at the pairing (b[j], forward); j = 0 means the window
    /// is exactly the open chunk and the forward buffer alone decides.
    /// Intra-buffer root equality first, then reachability across the
    /// bipartite graph. Vertices in neither buffer answer false.
    bool query(VertexId u, VertexId v, std::uint64_t j) const {
        auto fu = forward_.find(u);
        auto fv = forward_.find(v);
        if (fu && fv && *fu == *fv) {
            return true;
        }
        if (j == 0 || !prev_backward_) {
            return false;
        }
        auto bu = prev_backward_->find_root_at(u, j);
        auto bv = prev_backward_->find_root_at(v, j);
        if (bu && bv && *bu == *bv) {
            return true;
        }
        std::optional<RootRef> ru =
            fu ? std::optional(forward_root(*fu)) : bu ? std::optional(backward_root(*bu)) : std::nullopt;
        std::optional<RootRef> rv =
            fv ? std::optional(forward_root(*fv)) : bv ? std::optional(backward_root(*bv)) : std::nullopt;
        if (!ru || !rv) {
            return false;
        }
        return bfbg_.connected(*ru, *rv, j);
    }

    /// Chunk close: build the backward forest from the stored chunk, then
    /// reset the per-chunk state. `build_backward` is false only at end of
    /// stream, where no successor window exists to consume a build (or the
    /// reset), so the terminal close does no work beyond bookkeeping.
    void rollover(bool build_backward) {
        ++chunks_closed_;
        if (!build_backward) {
            return;
        }
        if (prev_backward_) {
            carried_ops_ += prev_backward_->ops();
        }
        prev_backward_ = BackwardAuft::build(open_chunk_);
        forward_.clear();
        bfbg_.clear();
        processed_.clear();
        open_chunk_.clear();
    }

    MemoryCounters memory_counters() const {
        MemoryCounters m;
        m.forward_nodes = forward_.vertex_count();
        if (prev_backward_) {
            m.auft_nodes = prev_backward_->vertex_count();
            m.auft_uftes = prev_backward_->ufte_count();
        }
        BfbgStats s = bfbg_.stats();
        m.bfbg_nodes = s.backward_nodes + s.forward_nodes;
        m.bfbg_edges = s.edge_count;
        m.bfbg_intervals = s.interval_count;
        m.chunk_edges_stored = open_chunk_.edge_count();
        return m;
    }

    /// Union-find and forest walk work done so far, across resets.
    OpCounters total_ops() const {
        OpCounters t = carried_ops_;
        t += forward_.ops();
        if (prev_backward_) {
            t += prev_backward_->ops();
        }
        return t;
    }

    const UnionFind& forward() const { return forward_; }
    const BackwardAuft* prev_backward() const { return prev_backward_ ? &*prev_backward_ : nullptr; }
    const Bfbg& bfbg() const { return bfbg_; }
    const ChunkStore& open_chunk() const { return open_chunk_; }
    std::uint64_t chunks_closed() const { return chunks_closed_; }

private:
    std::uint64_t chunk_size_;
    UnionFind forward_;
    std::optional<BackwardAuft> prev_backward_;
    Bfbg bfbg_;
    absl::flat_hash_set<VertexId> processed_;
    ChunkStore open_chunk_;
    std::uint64_t chunks_closed_ = 0;
    OpCounters carried_ops_;
};

} // namespace swcc
