#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "swcc/stream.hpp"

namespace swcc {

/// Emitted when a union links two roots: child_root became a child of
/// parent_root. Lets the bipartite index relocate edges hanging off the
/// demoted root.
struct LinkEvent {
    VertexId child_root = 0;
    VertexId parent_root = 0;

    friend bool operator==(const LinkEvent&, const LinkEvent&) = default;
};

/// Running totals of union-find work, used by the benchmark harness to
/// compare engines on operation counts rather than wall clock.
struct OpCounters {
    std::uint64_t find_calls = 0;
    std::uint64_t hops = 0; // parent links followed across all finds

    void reset() { *this = OpCounters{}; }

    OpCounters& operator+=(const OpCounters& o) {
        find_calls += o.find_calls;
        hops += o.hops;
        return *this;
    }
};

/// Union-by-size forest over sparse 64-bit vertex ids. The smaller tree's
/// root always becomes the child; size ties make the larger id the child,
/// so identical edge sequences produce identical parent maps.
///
/// Path compression is off by default (roots are stable either way, but the
/// uncompressed form keeps find cost at the analyzed log bound and mirrors
/// the structures that must never compress).
class UnionFind {
public:
    explicit UnionFind(bool path_compression = false)
        : path_compression_(path_compression) {}

    bool contains(VertexId v) const { return parent_.find(v) != parent_.end(); }

    std::uint64_t vertex_count() const { return parent_.size(); }
    std::uint64_t component_count() const { return component_count_; }

    /// Registers v as a singleton if unseen.
    void ensure(VertexId v) {
        auto [it, inserted] = parent_.emplace(v, v);
        if (inserted) {
            size_.emplace(v, 1);
            ++component_count_;
        }
    }

    /// Root of v's tree, or nullopt when v was never inserted.
    std::optional<VertexId> find(VertexId v) const {
        auto it = parent_.find(v);
        if (it == parent_.end()) {
            return std::nullopt;
        }
        ++ops_.find_calls;
        VertexId cur = v;
        while (true) {
            VertexId p = parent_.at(cur);
            if (p == cur) {
                break;
            }
            ++ops_.hops;
            cur = p;
        }
        if (path_compression_) {
            VertexId walk = v;
            while (walk != cur) {
                VertexId p = parent_.at(walk);
                parent_[walk] = cur;
                walk = p;
            }
        }
        return cur;
    }

    std::uint64_t size_of_root(VertexId root) const { return size_.at(root); }

    /// Inserts edge (u, v); absent endpoints become singletons. Returns the
    /// link performed, or nullopt when u and v were already connected
    /// (including self-loops, which only register the vertex).
    std::optional<LinkEvent> unite(VertexId u, VertexId v) {
        ensure(u);
        ensure(v);
        if (u == v) {
            return std::nullopt;
        }
        VertexId ru = *find(u);
        VertexId rv = *find(v);
        if (ru == rv) {
            return std::nullopt;
        }
        VertexId child, parent;
        std::uint64_t su = size_.at(ru);
        std::uint64_t sv = size_.at(rv);
        if (su < sv || (su == sv && ru > rv)) {
            child = ru;
            parent = rv;
        } else {
            child = rv;
            parent = ru;
        }
        parent_[child] = parent;
        size_[parent] += size_[child];
        size_.erase(child);
        --component_count_;
        return LinkEvent{child, parent};
    }

    void clear() {
        parent_.clear();
        size_.clear();
        component_count_ = 0;
    }

    void reserve(std::size_t n) {
        parent_.reserve(n);
        size_.reserve(n);
    }

    const std::unordered_map<VertexId, VertexId>& parent_map() const { return parent_; }

    const OpCounters& ops() const { return ops_; }
    void reset_ops() { ops_.reset(); }

private:
    mutable std::unordered_map<VertexId, VertexId> parent_; // roots map to self
    std::unordered_map<VertexId, std::uint64_t> size_;      // roots only
    std::uint64_t component_count_ = 0;
    bool path_compression_ = false;
    mutable OpCounters ops_;
};

} // namespace swcc
