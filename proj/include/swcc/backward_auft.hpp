#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "swcc/stream.hpp"
#include "swcc/union_find.hpp"

namespace swcc {

/// Inclusive range of snapshot indexes.
struct SnapshotInterval {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    bool contains(std::uint64_t j) const { return lo <= j && j <= hi; }
    friend bool operator==(const SnapshotInterval&, const SnapshotInterval&) = default;
};

/// Bipartite edge between a backward root and a forward root, valid for the
/// snapshot indexes in `span`.
struct IntervalEdge {
    VertexId backward_root = 0;
    VertexId forward_root = 0;
    SnapshotInterval span;

    friend bool operator==(const IntervalEdge&, const IntervalEdge&) = default;
};

/// One stored union-find tree edge (child -> parent) with its snapshot label.
struct StoredUfte {
    VertexId parent = 0;
    VertexId child = 0;
    std::uint64_t label = 0;

    friend bool operator==(const StoredUfte&, const StoredUfte&) = default;
};

/// Snapshot-isolated, augmented union-find forest for one completed chunk.
///
/// Built by scanning the chunk's slides from chunk_size-1 down to 1 (offset 0
/// is never paired with a successor window, so it is excluded). A single
/// structure answers find/membership for every snapshot b[j], j >= 1:
///
///   - each tree edge carries the snapshot index at which it was inserted;
///     walking root-ward and stopping before the first edge labeled < j
///     yields the root v would have in a freshly built b[j];
///   - each vertex carries the largest snapshot index containing it;
///   - each vertex that is ever a root carries the inclusive snapshot range
///     of its rootship, letting one walk enumerate all roots a vertex has
///     across snapshots, with the ranges they cover.
///
/// Edge labels are non-increasing along any root-ward path, which is what
/// makes the early-stop rule correct. No path compression, ever: it would
/// destroy both the labels and the rootship history.
class BackwardAuft {
public:
    BackwardAuft() = default;

    static BackwardAuft build(const ChunkStore& chunk) {
        BackwardAuft b;
        b.chunk_size_ = chunk.chunk_size();
        for (std::uint64_t j = chunk.chunk_size(); j-- > 1;) {
            for (const auto& [u, v] : chunk.slide(j)) {
                b.insert_edge(u, v, j);
            }
        }
        return b;
    }

    bool contains(VertexId v) const { return nodes_.find(v) != nodes_.end(); }

    /// True iff v exists in snapshot b[j], i.e. some edge of slides
    /// j..chunk_size-1 mentions v.
    bool contains_at(VertexId v, std::uint64_t j) const {
        auto it = nodes_.find(v);
        return it != nodes_.end() && it->second.vertex_label >= j;
    }

    std::optional<std::uint64_t> vertex_label(VertexId v) const {
        auto it = nodes_.find(v);
        if (it == nodes_.end()) {
            return std::nullopt;
        }
        return it->second.vertex_label;
    }

    std::optional<SnapshotInterval> root_interval(VertexId v) const {
        auto it = nodes_.find(v);
        if (it == nodes_.end() || !it->second.has_interval) {
            return std::nullopt;
        }
        return it->second.interval;
    }

    /// Root of v in snapshot b[j], or nullopt when v is absent from b[j].
    /// Walks root-ward, stopping before the first edge labeled < j.
    std::optional<VertexId> find_root_at(VertexId v, std::uint64_t j) const {
        auto it = nodes_.find(v);
        if (it == nodes_.end() || it->second.vertex_label < j) {
            return std::nullopt;
        }
        ++ops_.find_calls;
        VertexId cur = v;
        const Node* n = &it->second;
        while (n->parent != cur && n->edge_label >= j) {
            cur = n->parent;
            n = &nodes_.at(cur);
            ++ops_.hops;
        }
        return cur;
    }

    /// Enumerates every root v has across snapshots j..vertex_label(v) as
    /// bipartite edges toward forward_root. The returned spans are disjoint
    /// and tile [j, vertex_label(v)] exactly, highest snapshots first.
    std::vector<IntervalEdge> compute_edges_and_intervals(std::uint64_t j, VertexId v,
                                                          VertexId forward_root) const {
        if (!contains_at(v, j)) {
            throw std::logic_error("compute_edges_and_intervals: vertex " + std::to_string(v) +
                                   " is not in snapshot " + std::to_string(j));
        }
        std::vector<IntervalEdge> out;
        const std::uint64_t l = nodes_.at(v).vertex_label;

        // First vertex on the path whose rootship starts within v's lifetime;
        // this is v's root in the highest snapshot that contains v.
        VertexId cur = v;
        const Node* n = &nodes_.at(cur);
        ++ops_.find_calls;
        while (!(n->has_interval && n->interval.lo <= l)) {
            if (n->parent == cur) {
                throw std::logic_error("auft: no rootship range covers vertex " +
                                       std::to_string(v) + " at label " + std::to_string(l));
            }
            cur = n->parent;
            n = &nodes_.at(cur);
            ++ops_.hops;
        }
        const std::uint64_t hi1 = std::min(l, n->interval.hi);
        if (n->parent == cur) {
            out.push_back({cur, forward_root, {j, hi1}});
            return out;
        }
        if (std::uint64_t lo = std::max(n->interval.lo, j); lo <= hi1) {
            out.push_back({cur, forward_root, {lo, hi1}});
        }
        if (n->interval.lo <= j) {
            return out;
        }
        std::uint64_t next_hi = n->interval.lo - 1;

        // Earlier roots sit higher on the path; each rootship hands over to
        // the one below it at (lower root's start - 1).
        cur = n->parent;
        n = &nodes_.at(cur);
        ++ops_.hops;
        while (n->parent != cur) {
            if (n->has_interval) {
                if (std::uint64_t lo = std::max(n->interval.lo, j); lo <= next_hi) {
                    out.push_back({cur, forward_root, {lo, next_hi}});
                }
                if (n->interval.lo <= j) {
                    return out;
                }
                next_hi = n->interval.lo - 1;
            }
            cur = n->parent;
            n = &nodes_.at(cur);
            ++ops_.hops;
        }
        if (j <= next_hi) {
            out.push_back({cur, forward_root, {j, next_hi}});
        }
        return out;
    }

    std::uint64_t vertex_count() const { return nodes_.size(); }
    std::uint64_t ufte_count() const { return ufte_count_; }
    std::uint64_t chunk_size() const { return chunk_size_; }

    std::vector<StoredUfte> stored_uftes() const {
        std::vector<StoredUfte> out;
        out.reserve(ufte_count_);
        for (const auto& [id, n] : nodes_) {
            if (n.parent != id) {
                out.push_back({n.parent, id, n.edge_label});
            }
        }
        return out;
    }

    const OpCounters& ops() const { return ops_; }
    void reset_ops() { ops_.reset(); }

private:
    struct Node {
        VertexId parent = 0;          // self if root
        std::uint64_t edge_label = 0; // label of the (this -> parent) edge
        std::uint64_t vertex_label = 0;
        SnapshotInterval interval;
        bool has_interval = false;
        std::uint64_t size = 1; // valid for roots during build only
    };

    // First sighting during the backward scan is the vertex's highest
    // snapshot; it is a root of its own (possibly singleton) tree from
    // snapshot 1 until demoted, so the rootship range starts as [1, j].
    Node& touch(VertexId v, std::uint64_t j) {
        auto [it, inserted] = nodes_.try_emplace(v);
        Node& n = it->second;
        if (inserted) {
            n.parent = v;
            n.vertex_label = j;
            n.interval = {1, j};
            n.has_interval = true;
        }
        return n;
    }

    void insert_edge(VertexId u, VertexId v, std::uint64_t j) {
        touch(u, j);
        touch(v, j);
        if (u == v) {
            return;
        }
        VertexId ru = build_find(u);
        VertexId rv = build_find(v);
        if (ru == rv) {
            return;
        }
        std::uint64_t su = nodes_.at(ru).size;
        std::uint64_t sv = nodes_.at(rv).size;
        VertexId child, parent;
        if (su < sv || (su == sv && ru > rv)) {
            child = ru;
            parent = rv;
        } else {
            child = rv;
            parent = ru;
        }
        Node& cn = nodes_.at(child);
        Node& pn = nodes_.at(parent);
        cn.parent = parent;
        cn.edge_label = j;
        pn.size += cn.size;
        ++ufte_count_;
        // The demoted root stops being a root at snapshot j; an emptied
        // range means it was never a root at any complete snapshot.
        if (cn.has_interval) {
            cn.interval.lo = j + 1;
            if (cn.interval.lo > cn.interval.hi) {
                cn.has_interval = false;
            }
        }
    }

    VertexId build_find(VertexId v) {
        ++ops_.find_calls;
        VertexId cur = v;
        const Node* n = &nodes_.at(cur);
        while (n->parent != cur) {
            cur = n->parent;
            n = &nodes_.at(cur);
            ++ops_.hops;
        }
        return cur;
    }

    absl::flat_hash_map<VertexId, Node> nodes_;
    std::uint64_t ufte_count_ = 0;
    std::uint64_t chunk_size_ = 0;
    mutable OpCounters ops_;
};

} // namespace swcc
