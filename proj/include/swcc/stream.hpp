#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace swcc {

using VertexId = std::uint64_t;
using Timestamp = std::uint64_t;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OrderingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An undirected edge with a timestamp. Timestamps are non-decreasing in
/// arrival order; u == v is a legal self-loop (registers the vertex only).
struct StreamingEdge {
    VertexId u = 0;
    VertexId v = 0;
    Timestamp ts = 0;

    friend bool operator==(const StreamingEdge&, const StreamingEdge&) = default;
};

/// Time-based sliding window: |window| = alpha time units, advancing by beta.
/// A window is chunk_size() consecutive slide intervals, where slide interval
/// k holds timestamps in [origin + k*beta, origin + (k+1)*beta).
struct WindowSpec {
    std::uint64_t alpha = 0;
    std::uint64_t beta = 0;
    Timestamp origin = 0;

    static WindowSpec create(std::uint64_t alpha, std::uint64_t beta, Timestamp origin = 0) {
        if (beta == 0) {
            throw ConfigError("slide interval must be positive");
        }
        if (alpha % beta != 0) {
            throw ConfigError("window size " + std::to_string(alpha) +
                              " is not a multiple of slide interval " + std::to_string(beta));
        }
        if (alpha / beta < 2) {
            throw ConfigError("window must span at least 2 slide intervals, got " +
                              std::to_string(alpha / beta));
        }
        return WindowSpec{alpha, beta, origin};
    }

    std::uint64_t chunk_size() const { return alpha / beta; }

    std::uint64_t slide_of(Timestamp ts) const {
        if (ts < origin) {
            throw OrderingError("timestamp " + std::to_string(ts) +
                                " precedes stream origin " + std::to_string(origin));
        }
        return (ts - origin) / beta;
    }
};

/// Position of a global slide inside the chunk grid: chunks are 1-based,
/// offsets run 0..chunk_size-1, and s = (chunk_index-1)*chunk_size + offset.
struct ChunkCoord {
    std::uint64_t chunk_index = 0;
    std::uint64_t offset = 0;

    friend bool operator==(const ChunkCoord&, const ChunkCoord&) = default;
};

inline ChunkCoord chunk_coord(std::uint64_t slide, std::uint64_t chunk_size) {
    return ChunkCoord{slide / chunk_size + 1, slide % chunk_size};
}

inline std::uint64_t global_slide(const ChunkCoord& c, std::uint64_t chunk_size) {
    return (c.chunk_index - 1) * chunk_size + c.offset;
}

/// Edges of the currently open chunk, bucketed by slide offset. Retained so
/// the backward buffer can be built once the chunk completes.
class ChunkStore {
public:
    explicit ChunkStore(std::uint64_t chunk_size = 0) : slides_(chunk_size) {}

    void add(std::uint64_t offset, VertexId u, VertexId v) {
        slides_[offset].emplace_back(u, v);
        ++edge_count_;
    }

    void clear() {
        for (auto& s : slides_) {
            s.clear();
        }
        edge_count_ = 0;
    }

    const std::vector<std::pair<VertexId, VertexId>>& slide(std::uint64_t offset) const {
        return slides_[offset];
    }

    std::uint64_t chunk_size() const { return slides_.size(); }
    std::uint64_t edge_count() const { return edge_count_; }

private:
    std::vector<std::vector<std::pair<VertexId, VertexId>>> slides_;
    std::uint64_t edge_count_ = 0;
};

namespace detail {

inline std::uint64_t parse_u64_field(std::string_view tok, const char* what, std::uint64_t line_no) {
    if (tok.empty()) {
        throw ParseError("line " + std::to_string(line_no) + ": missing " + what);
    }
    if (tok.front() == '-') {
        throw ParseError("line " + std::to_string(line_no) + ": negative " + what + " '" +
                         std::string(tok) + "'");
    }
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw ParseError("line " + std::to_string(line_no) + ": " + what + " overflows 64 bits: '" +
                         std::string(tok) + "'");
    }
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed " + what + " '" +
                         std::string(tok) + "'");
    }
    return value;
}

} // namespace detail

/// Parses one stream line of the form `<u> <v> <ts>`. Returns nullopt for
/// blank lines and `#` comments. Throws ParseError naming the line number.
inline std::optional<StreamingEdge> parse_edge(std::string_view line, std::uint64_t line_no = 0) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
            ++pos;
        }
    };
    skip_ws();
    if (pos == line.size() || line[pos] == '#') {
        return std::nullopt;
    }
    auto next_token = [&]() -> std::string_view {
        skip_ws();
        std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') {
            ++pos;
        }
        return line.substr(start, pos - start);
    };
    StreamingEdge e;
    e.u = detail::parse_u64_field(next_token(), "source vertex", line_no);
    e.v = detail::parse_u64_field(next_token(), "target vertex", line_no);
    e.ts = detail::parse_u64_field(next_token(), "timestamp", line_no);
    skip_ws();
    if (pos != line.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": trailing content '" +
                         std::string(line.substr(pos)) + "'");
    }
    return e;
}

/// Line-oriented reader over an edge stream. Validates timestamp ordering
/// and tracks line numbers for diagnostics.
class StreamReader {
public:
    explicit StreamReader(std::istream& in) : in_(in) {}

    std::optional<StreamingEdge> next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            auto e = parse_edge(line, line_no_);
            if (!e) {
                continue;
            }
            if (last_ts_ && e->ts < *last_ts_) {
                throw OrderingError("line " + std::to_string(line_no_) + ": timestamp " +
                                    std::to_string(e->ts) + " regresses below " +
                                    std::to_string(*last_ts_));
            }
            last_ts_ = e->ts;
            return e;
        }
        return std::nullopt;
    }

    std::uint64_t line_no() const { return line_no_; }

private:
    std::istream& in_;
    std::uint64_t line_no_ = 0;
    std::optional<Timestamp> last_ts_;
};

} // namespace swcc
