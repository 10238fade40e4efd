#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>

#include "swcc/interval_set.hpp"

namespace swcc {

/// Which buffer a bipartite-graph node is a root of. A vertex id can appear
/// on both sides; the two nodes are distinct and only connected through
/// actual edges.
enum class BufferSide : std::uint8_t { Backward, Forward };

struct RootRef {
    VertexId id = 0;
    BufferSide side = BufferSide::Backward;

    friend bool operator==(const RootRef&, const RootRef&) = default;
};

inline RootRef backward_root(VertexId id) { return {id, BufferSide::Backward}; }
inline RootRef forward_root(VertexId id) { return {id, BufferSide::Forward}; }

struct BfbgStats {
    std::uint64_t backward_nodes = 0;
    std::uint64_t forward_nodes = 0;
    std::uint64_t edge_count = 0;
    std::uint64_t interval_count = 0;

    friend bool operator==(const BfbgStats&, const BfbgStats&) = default;
};

/// Bipartite graph between backward-buffer roots and forward-buffer roots.
/// Each edge carries the snapshot ranges for which its backward endpoint is
/// the root of some shared vertex; reachability restricted to edges stabbing
/// a snapshot index answers cross-buffer connectivity at that snapshot.
class Bfbg {
public:
    void insert(const IntervalEdge& e) {
        auto& row = adj_[e.backward_root];
        auto [it, inserted] = row.try_emplace(e.forward_root);
        std::size_t before = it->second.size();
        it->second.insert(e.span);
        interval_count_ += it->second.size() - before;
        if (inserted) {
            // (backward, forward) pairs are created at most once, so the
            // reverse rows stay duplicate-free by construction
            rev_[e.forward_root].push_back(e.backward_root);
            ++edge_count_;
        }
    }

    /// Relocates every edge (x, old_root) to (x, new_root), merging interval
    /// lists where both existed. Triggered by a forward-buffer link making
    /// old_root a child of new_root. No-op if old_root has no edges.
    void move_forward_root(VertexId old_root, VertexId new_root) {
        auto rit = rev_.find(old_root);
        if (rit == rev_.end()) {
            return;
        }
        std::vector<VertexId> backs = std::move(rit->second);
        rev_.erase(rit);
        auto& new_backs = rev_[new_root];
        for (VertexId b : backs) {
            auto& row = adj_.at(b);
            IntervalSet moved = std::move(row.at(old_root));
            row.erase(old_root);
            auto [new_it, inserted] = row.try_emplace(new_root);
            if (inserted) {
                new_it->second = std::move(moved);
                new_backs.push_back(b);
            } else {
                --edge_count_;
                std::size_t before = new_it->second.size() + moved.size();
                new_it->second.merge_from(moved);
                interval_count_ -= before - new_it->second.size();
            }
        }
    }

    /// Reachability over edges that stab snapshot j. Bidirectional search
    /// expanding the smaller frontier, so probes from tiny components stay
    /// cheap even when a hub root has a wide adjacency row. Absent endpoints
    /// are simply not connected; equal present endpoints are.
    bool connected(RootRef from, RootRef to, std::uint64_t j) const {
        if (!contains(from) || !contains(to)) {
            return false;
        }
        if (from == to) {
            return true;
        }
        Search a, b;
        a.mark(from);
        b.mark(to);
        a.frontier.push_back(from);
        a.pending_cost = row_size(from);
        b.frontier.push_back(to);
        b.pending_cost = row_size(to);
        while (!a.frontier.empty() && !b.frontier.empty()) {
            // expand whichever side has less adjacency left to scan, so a
            // probe from a tiny component never walks a hub root's row
            Search& cur = a.pending_cost <= b.pending_cost ? a : b;
            Search& other = &cur == &a ? b : a;
            if (expand(cur, other, j)) {
                return true;
            }
        }
        return false;
    }

    bool contains(RootRef r) const {
        if (r.side == BufferSide::Backward) {
            return adj_.find(r.id) != adj_.end();
        }
        return rev_.find(r.id) != rev_.end();
    }

    BfbgStats stats() const {
        return {adj_.size(), rev_.size(), edge_count_, interval_count_};
    }

    /// Interval list of edge (backward, forward), null if absent.
    const IntervalSet* edge(VertexId backward, VertexId forward) const {
        auto it = adj_.find(backward);
        if (it == adj_.end()) {
            return nullptr;
        }
        auto jt = it->second.find(forward);
        return jt == it->second.end() ? nullptr : &jt->second;
    }

    template <class Fn>
    void for_each_edge(Fn&& fn) const {
        for (const auto& [b, row] : adj_) {
            for (const auto& [f, ivs] : row) {
                fn(b, f, ivs);
            }
        }
    }

    void clear() {
        adj_.clear();
        rev_.clear();
        edge_count_ = 0;
        interval_count_ = 0;
    }

private:
    struct Search {
        std::vector<RootRef> frontier;
        std::uint64_t pending_cost = 0; // total adjacency of the frontier
        absl::flat_hash_set<VertexId> seen_b;
        absl::flat_hash_set<VertexId> seen_f;

        void mark(RootRef r) {
            (r.side == BufferSide::Backward ? seen_b : seen_f).insert(r.id);
        }
        bool seen(RootRef r) const {
            return r.side == BufferSide::Backward ? seen_b.contains(r.id) : seen_f.contains(r.id);
        }
    };

    std::uint64_t row_size(RootRef r) const {
        if (r.side == BufferSide::Backward) {
            auto it = adj_.find(r.id);
            return it == adj_.end() ? 0 : it->second.size();
        }
        auto it = rev_.find(r.id);
        return it == rev_.end() ? 0 : it->second.size();
    }

    // Expands one level of `cur`; true when it touches `other`'s territory.
    bool expand(Search& cur, const Search& other, std::uint64_t j) const {
        std::vector<RootRef> next;
        std::uint64_t next_cost = 0;
        for (const RootRef& node : cur.frontier) {
            if (node.side == BufferSide::Backward) {
                auto it = adj_.find(node.id);
                if (it == adj_.end()) {
                    continue;
                }
                for (const auto& [f, ivs] : it->second) {
                    if (!ivs.stabs(j)) {
                        continue;
                    }
                    RootRef r = forward_root(f);
                    if (other.seen(r)) {
                        return true;
                    }
                    if (cur.seen_f.insert(f).second) {
                        next.push_back(r);
                        next_cost += row_size(r);
                    }
                }
            } else {
                auto it = rev_.find(node.id);
                if (it == rev_.end()) {
                    continue;
                }
                for (VertexId b : it->second) {
                    if (!adj_.at(b).at(node.id).stabs(j)) {
                        continue;
                    }
                    RootRef r = backward_root(b);
                    if (other.seen(r)) {
                        return true;
                    }
                    if (cur.seen_b.insert(b).second) {
                        next.push_back(r);
                        next_cost += row_size(r);
                    }
                }
            }
        }
        cur.frontier = std::move(next);
        cur.pending_cost = next_cost;
        return false;
    }

    absl::flat_hash_map<VertexId, absl::flat_hash_map<VertexId, IntervalSet>> adj_;
    absl::flat_hash_map<VertexId, std::vector<VertexId>> rev_;
    std::uint64_t edge_count_ = 0;
    std::uint64_t interval_count_ = 0;
};

} // namespace swcc
