#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "swcc/stream.hpp"

namespace swcc {

/// Vertex pairs queried in every window instance.
struct Workload {
    std::vector<std::pair<VertexId, VertexId>> pairs;
};

struct WindowResult {
    std::uint64_t window_start_slide = 0;
    std::vector<bool> results; // one per workload pair

    friend bool operator==(const WindowResult&, const WindowResult&) = default;
};

inline std::string serialize_window_result(const WindowResult& r) {
    std::string s = "{\"window_start_slide\": " + std::to_string(r.window_start_slide) +
                    ", \"results\": [";
    for (std::size_t i = 0; i < r.results.size(); ++i) {
        if (i != 0) {
            s += ',';
        }
        s += r.results[i] ? "true" : "false";
    }
    s += "]}";
    return s;
}

/// Logical sizes of the live index structures; sampled at each window
/// completion so memory is reported portably instead of as resident bytes.
struct MemoryCounters {
    std::uint64_t forward_nodes = 0;
    std::uint64_t auft_nodes = 0;
    std::uint64_t auft_uftes = 0;
    std::uint64_t bfbg_nodes = 0;
    std::uint64_t bfbg_edges = 0;
    std::uint64_t bfbg_intervals = 0;
    std::uint64_t chunk_edges_stored = 0;

    friend bool operator==(const MemoryCounters&, const MemoryCounters&) = default;
};

/// Feeds an ordered edge stream to an engine, turning slide-boundary
/// crossings into window evaluations and chunk rollovers.
///
/// Contract with Engine:
///   void on_edge(VertexId u, VertexId v, ChunkCoord coord);
///   WindowResult evaluate_window(uint64_t start_slide, uint64_t end_slide,
///                                const Workload&);
///   void rollover(bool build_backward);   // called when a chunk completes
///   MemoryCounters memory_counters() const;
///
/// Boundary handling is ordered: every slide strictly below an edge's slide
/// is completed before the edge is delivered, and finish() completes the
/// last seen slide so every full window gets evaluated exactly once.
///
/// One latency sample is recorded per evaluated window. The sample taken at
/// a chunk boundary includes the rollover work (backward-buffer build) it
/// triggers. The rollover at end of stream skips the build: no later edge
/// exists to consume it.
template <class Engine>
class SlidingWindowDriver {
public:
    using ResultFn = std::function<void(const WindowResult&)>;

    SlidingWindowDriver(WindowSpec spec, Engine& engine, Workload workload,
                        ResultFn on_result = nullptr)
        : spec_(spec),
          chunk_size_(spec.chunk_size()),
          engine_(engine),
          workload_(std::move(workload)),
          on_result_(std::move(on_result)) {}

    void push(const StreamingEdge& e) {
        std::uint64_t s = spec_.slide_of(e.ts);
        if (started_ && s < current_slide_) {
            throw OrderingError("edge at timestamp " + std::to_string(e.ts) +
                                " belongs to already-completed slide " + std::to_string(s));
        }
        started_ = true;
        while (current_slide_ < s) {
            complete_slide(current_slide_, false);
            ++current_slide_;
        }
        engine_.on_edge(e.u, e.v, chunk_coord(s, chunk_size_));
        ++edge_count_;
    }

    /// End of stream: completes the last slide so all full windows ending at
    /// or before it are evaluated.
    void finish() {
        if (!started_ || finished_) {
            finished_ = true;
            return;
        }
        finished_ = true;
        complete_slide(current_slide_, true);
    }

    std::uint64_t edge_count() const { return edge_count_; }
    std::uint64_t window_count() const { return latency_ns_.size(); }
    const std::vector<std::uint64_t>& latency_samples_ns() const { return latency_ns_; }
    const std::vector<MemoryCounters>& counter_samples() const { return counter_samples_; }

private:
    void complete_slide(std::uint64_t s, bool is_final) {
        bool chunk_last = (s + 1) % chunk_size_ == 0;
        if (s + 1 < chunk_size_) {
            return; // no full window ends this early
        }
        auto t0 = std::chrono::steady_clock::now();
        WindowResult result = engine_.evaluate_window(s + 1 - chunk_size_, s, workload_);
        MemoryCounters counters = engine_.memory_counters();
        if (chunk_last) {
            engine_.rollover(!is_final);
        }
        auto t1 = std::chrono::steady_clock::now();
        latency_ns_.push_back(static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
        counter_samples_.push_back(counters);
        if (on_result_) {
            on_result_(result);
        }
    }

    WindowSpec spec_;
    std::uint64_t chunk_size_;
    Engine& engine_;
    Workload workload_;
    ResultFn on_result_;
    bool started_ = false;
    bool finished_ = false;
    std::uint64_t current_slide_ = 0;
    std::uint64_t edge_count_ = 0;
    std::vector<std::uint64_t> latency_ns_;
    std::vector<MemoryCounters> counter_samples_;
};

} // namespace swcc
