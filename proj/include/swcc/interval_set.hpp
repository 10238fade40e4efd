#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "swcc/backward_auft.hpp"

namespace swcc {

/// Sorted list of disjoint, non-adjacent inclusive intervals over snapshot
/// indexes. Inserts coalesce overlapping and adjacent ranges; stabbing is a
/// binary search. Lists stay tiny after merging, so this beats a tree.
class IntervalSet {
public:
    void insert(SnapshotInterval iv) {
        // First interval that could touch iv: ends at iv.lo-1 or later.
        auto it = std::lower_bound(ivs_.begin(), ivs_.end(), iv,
                                   [](const SnapshotInterval& a, const SnapshotInterval& b) {
                                       return a.hi + 1 < b.lo;
                                   });
        auto first = it;
        while (it != ivs_.end() && it->lo <= iv.hi + 1) {
            iv.lo = std::min(iv.lo, it->lo);
            iv.hi = std::max(iv.hi, it->hi);
            ++it;
        }
        if (first == it) {
            ivs_.insert(first, iv);
        } else {
            *first = iv;
            ivs_.erase(first + 1, it);
        }
    }

    bool stabs(std::uint64_t j) const {
        auto it = std::upper_bound(ivs_.begin(), ivs_.end(), j,
                                   [](std::uint64_t x, const SnapshotInterval& a) {
                                       return x < a.lo;
                                   });
        return it != ivs_.begin() && std::prev(it)->hi >= j;
    }

    void merge_from(const IntervalSet& other) {
        for (const auto& iv : other.ivs_) {
            insert(iv);
        }
    }

    std::size_t size() const { return ivs_.size(); }
    bool empty() const { return ivs_.empty(); }
    const std::vector<SnapshotInterval>& intervals() const { return ivs_; }

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<SnapshotInterval> ivs_;
};

} // namespace swcc
