#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "swcc/driver.hpp"

namespace swcc {

/// Nearest-rank percentile: sort ascending, take element ceil(p*n) - 1.
/// No interpolation, so results are exactly testable.
template <class T>
T percentile(std::vector<T> samples, double p) {
    if (samples.empty()) {
        throw std::invalid_argument("percentile of empty sample set");
    }
    if (p <= 0.0 || p > 1.0) {
        throw std::invalid_argument("percentile fraction must be in (0, 1]");
    }
    std::sort(samples.begin(), samples.end());
    auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(samples.size())));
    return samples[rank - 1];
}

struct Metrics {
    std::string engine;
    std::uint64_t total_edges = 0;
    std::uint64_t wall_time_ns = 0;
    double throughput_edges_per_sec = 0.0;
    std::vector<std::uint64_t> latency_samples_ns;
    std::uint64_t p50_ns = 0;
    std::uint64_t p95_ns = 0;
    std::uint64_t p99_ns = 0;
    MemoryCounters memory_counters; // per-field median across window instances

    friend bool operator==(const Metrics&, const Metrics&) = default;
};

inline Metrics make_metrics(std::string engine, std::uint64_t total_edges,
                            std::uint64_t wall_time_ns,
                            std::vector<std::uint64_t> latency_ns,
                            const std::vector<MemoryCounters>& counter_samples) {
    Metrics m;
    m.engine = std::move(engine);
    m.total_edges = total_edges;
    m.wall_time_ns = wall_time_ns;
    m.throughput_edges_per_sec =
        wall_time_ns == 0 ? 0.0
                          : static_cast<double>(total_edges) /
                                (static_cast<double>(wall_time_ns) * 1e-9);
    if (!latency_ns.empty()) {
        m.p50_ns = percentile(latency_ns, 0.50);
        m.p95_ns = percentile(latency_ns, 0.95);
        m.p99_ns = percentile(latency_ns, 0.99);
    }
    m.latency_samples_ns = std::move(latency_ns);
    if (!counter_samples.empty()) {
        auto median_of = [&](auto field) {
            std::vector<std::uint64_t> vals;
            vals.reserve(counter_samples.size());
            for (const auto& c : counter_samples) {
                vals.push_back(c.*field);
            }
            return percentile(vals, 0.50);
        };
        m.memory_counters.forward_nodes = median_of(&MemoryCounters::forward_nodes);
        m.memory_counters.auft_nodes = median_of(&MemoryCounters::auft_nodes);
        m.memory_counters.auft_uftes = median_of(&MemoryCounters::auft_uftes);
        m.memory_counters.bfbg_nodes = median_of(&MemoryCounters::bfbg_nodes);
        m.memory_counters.bfbg_edges = median_of(&MemoryCounters::bfbg_edges);
        m.memory_counters.bfbg_intervals = median_of(&MemoryCounters::bfbg_intervals);
        m.memory_counters.chunk_edges_stored = median_of(&MemoryCounters::chunk_edges_stored);
    }
    return m;
}

inline void to_json(nlohmann::json& j, const MemoryCounters& c) {
    j = nlohmann::json{{"forward_nodes", c.forward_nodes},
                       {"auft_nodes", c.auft_nodes},
                       {"auft_uftes", c.auft_uftes},
                       {"bfbg_nodes", c.bfbg_nodes},
                       {"bfbg_edges", c.bfbg_edges},
                       {"bfbg_intervals", c.bfbg_intervals},
                       {"chunk_edges_stored", c.chunk_edges_stored}};
}

inline void from_json(const nlohmann::json& j, MemoryCounters& c) {
    j.at("forward_nodes").get_to(c.forward_nodes);
    j.at("auft_nodes").get_to(c.auft_nodes);
    j.at("auft_uftes").get_to(c.auft_uftes);
    j.at("bfbg_nodes").get_to(c.bfbg_nodes);
    j.at("bfbg_edges").get_to(c.bfbg_edges);
    j.at("bfbg_intervals").get_to(c.bfbg_intervals);
    j.at("chunk_edges_stored").get_to(c.chunk_edges_stored);
}

inline void to_json(nlohmann::json& j, const Metrics& m) {
    j = nlohmann::json{{"engine", m.engine},
                       {"total_edges", m.total_edges},
                       {"wall_time_ns", m.wall_time_ns},
                       {"throughput_edges_per_sec", m.throughput_edges_per_sec},
                       {"p50_ns", m.p50_ns},
                       {"p95_ns", m.p95_ns},
                       {"p99_ns", m.p99_ns},
                       {"latency_samples_ns", m.latency_samples_ns},
                       {"memory_counters", m.memory_counters}};
}

inline void from_json(const nlohmann::json& j, Metrics& m) {
    j.at("engine").get_to(m.engine);
    j.at("total_edges").get_to(m.total_edges);
    j.at("wall_time_ns").get_to(m.wall_time_ns);
    j.at("throughput_edges_per_sec").get_to(m.throughput_edges_per_sec);
    j.at("p50_ns").get_to(m.p50_ns);
    j.at("p95_ns").get_to(m.p95_ns);
    j.at("p99_ns").get_to(m.p99_ns);
    j.at("latency_samples_ns").get_to(m.latency_samples_ns);
    j.at("memory_counters").get_to(m.memory_counters);
}

} // namespace swcc
