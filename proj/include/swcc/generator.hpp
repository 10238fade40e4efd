#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "swcc/stream.hpp"

namespace swcc {

/// SplitMix64: tiny, seedable, and identical on every platform — the
/// standard-library distributions are not reproducible across
/// implementations, and generated files must be byte-stable per seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Knuth's product-of-uniforms method, chunked so the running product
    /// never underflows for large means.
    std::uint64_t poisson(double mean) {
        std::uint64_t k = 0;
        while (mean > 0.0) {
            double step = std::min(mean, 100.0);
            double limit = std::exp(-step);
            double p = 1.0;
            do {
                ++k;
                p *= 1.0 - unit(); // (0, 1]: keeps the product strictly decreasing
            } while (p > limit);
            --k;
            mean -= step;
        }
        return k;
    }

private:
    std::uint64_t state_;
};

struct StreamGenConfig {
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;
    std::uint64_t edges_per_ts = 0; // mean edges per timestamp (Poisson)
    std::uint64_t seed = 0;
};

/// Seeded random edge stream: endpoints uniform over [1, vertices]
/// (self-loops possible), each timestamp carrying a Poisson-distributed
/// number of edges. Deterministic per seed.
inline std::vector<StreamingEdge> gen_stream(const StreamGenConfig& cfg) {
    if (cfg.vertices == 0 || cfg.edges == 0 || cfg.edges_per_ts == 0) {
        throw ConfigError("stream generation requires positive vertices, edges, edges_per_ts");
    }
    std::vector<StreamingEdge> out;
    out.reserve(cfg.edges);
    SplitMix64 rng(cfg.seed);
    Timestamp ts = 0;
    std::uint64_t remaining_at_ts = rng.poisson(static_cast<double>(cfg.edges_per_ts));
    for (std::uint64_t i = 0; i < cfg.edges; ++i) {
        while (remaining_at_ts == 0) {
            ++ts;
            remaining_at_ts = rng.poisson(static_cast<double>(cfg.edges_per_ts));
        }
        --remaining_at_ts;
        out.push_back({1 + rng.below(cfg.vertices), 1 + rng.below(cfg.vertices), ts});
    }
    return out;
}

inline void write_stream_file(const std::string& path, const StreamGenConfig& cfg,
                              const std::vector<StreamingEdge>& edges) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open stream file for writing: " + path);
    }
    out << "# random edge stream: vertices=" << cfg.vertices << " edges=" << cfg.edges
        << " edges_per_ts=" << cfg.edges_per_ts << " seed=" << cfg.seed << "\n";
    for (const auto& e : edges) {
        out << e.u << ' ' << e.v << ' ' << e.ts << '\n';
    }
    if (!out) {
        throw std::runtime_error("failed writing stream file: " + path);
    }
}

/// Query pairs sampled uniformly (with replacement) from the distinct
/// vertices of a stream; deterministic per seed.
inline std::vector<std::pair<VertexId, VertexId>> gen_queries(
    const std::vector<StreamingEdge>& stream, std::uint64_t count, std::uint64_t seed) {
    if (stream.empty()) {
        throw ConfigError("cannot sample queries from an empty stream");
    }
    std::unordered_set<VertexId> seen;
    for (const auto& e : stream) {
        seen.insert(e.u);
        seen.insert(e.v);
    }
    std::vector<VertexId> vertices(seen.begin(), seen.end());
    std::sort(vertices.begin(), vertices.end());
    SplitMix64 rng(seed);
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        VertexId u = vertices[rng.below(vertices.size())];
        VertexId v = vertices[rng.below(vertices.size())];
        out.emplace_back(u, v);
    }
    return out;
}

inline void write_query_file(const std::string& path,
                             const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open query file for writing: " + path);
    }
    for (const auto& [u, v] : pairs) {
        out << u << ' ' << v << '\n';
    }
    if (!out) {
        throw std::runtime_error("failed writing query file: " + path);
    }
}

inline std::vector<std::pair<VertexId, VertexId>> read_query_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open query file: " + path);
    }
    std::vector<std::pair<VertexId, VertexId>> out;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t pos = 0;
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) {
            ++pos;
        }
        if (pos == line.size() || line[pos] == '#') {
            continue;
        }
        std::size_t sp = line.find_first_of(" \t", pos);
        if (sp == std::string::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": query needs two vertex ids");
        }
        VertexId u = detail::parse_u64_field(std::string_view(line).substr(pos, sp - pos),
                                             "query source", line_no);
        std::size_t vstart = line.find_first_not_of(" \t", sp);
        std::size_t vend = line.find_first_of(" \t\r", vstart);
        if (vend == std::string::npos) {
            vend = line.size();
        }
        VertexId v = detail::parse_u64_field(std::string_view(line).substr(vstart, vend - vstart),
                                             "query target", line_no);
        out.emplace_back(u, v);
    }
    return out;
}

} // namespace swcc
