#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "swcc/baselines.hpp"
#include "swcc/driver.hpp"
#include "swcc/engine.hpp"
#include "swcc/generator.hpp"
#include "swcc/metrics.hpp"
#include "swcc/stream.hpp"

namespace swcc {

struct IngestReport {
    std::uint64_t edges = 0;
    std::uint64_t lines = 0;
    std::uint64_t windows = 0;
};

/// Streams a parsed edge source through a driver; boundary signalling and
/// the end-of-stream flush are handled by the driver itself.
template <class Engine>
IngestReport ingest(std::istream& in, SlidingWindowDriver<Engine>& driver) {
    StreamReader reader(in);
    while (auto e = reader.next()) {
        driver.push(*e);
    }
    driver.finish();
    return {driver.edge_count(), reader.line_no(), driver.window_count()};
}

enum class OriginMode { Zero, FirstEdge };

struct RunConfig {
    std::string stream_path;
    std::string queries_path;
    std::uint64_t alpha = 0;
    std::uint64_t beta = 0;
    std::string engine = "bic"; // bic | rwc | dfs
    std::string metrics_path;   // empty: skip metrics file
    std::string results_path;   // empty: skip per-window results file
    OriginMode origin = OriginMode::Zero;
};

namespace detail {

template <class Engine>
Metrics drive_stream(const RunConfig& cfg, const WindowSpec& spec, const Workload& workload,
                     StreamReader& reader, std::optional<StreamingEdge> first,
                     std::ofstream* results_out) {
    Engine engine(spec);
    auto on_result = [&](const WindowResult& r) {
        if (results_out) {
            *results_out << serialize_window_result(r) << '\n';
        }
    };
    SlidingWindowDriver<Engine> driver(spec, engine, workload, on_result);
    auto t0 = std::chrono::steady_clock::now();
    if (first) {
        driver.push(*first);
    }
    while (auto e = reader.next()) {
        driver.push(*e);
    }
    driver.finish();
    auto t1 = std::chrono::steady_clock::now();
    auto wall_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    return make_metrics(cfg.engine, driver.edge_count(), wall_ns, driver.latency_samples_ns(),
                        driver.counter_samples());
}

} // namespace detail

/// Runs one engine over a stream file, writing optional per-window results
/// (deterministic) and a metrics file (timing included, so not compared
/// across runs).
inline Metrics run(const RunConfig& cfg) {
    if (cfg.engine != "bic" && cfg.engine != "rwc" && cfg.engine != "dfs") {
        throw ConfigError("unknown engine '" + cfg.engine + "' (expected bic, rwc, or dfs)");
    }
    WindowSpec::create(cfg.alpha, cfg.beta); // validate early
    Workload workload{read_query_file(cfg.queries_path)};
    std::ifstream in(cfg.stream_path);
    if (!in) {
        throw std::runtime_error("cannot open stream file: " + cfg.stream_path);
    }
    std::ofstream results_out;
    if (!cfg.results_path.empty()) {
        results_out.open(cfg.results_path);
        if (!results_out) {
            throw std::runtime_error("cannot open results file for writing: " + cfg.results_path);
        }
    }
    StreamReader reader(in);
    auto first = reader.next();
    Timestamp origin = (cfg.origin == OriginMode::FirstEdge && first) ? first->ts : 0;
    WindowSpec spec = WindowSpec::create(cfg.alpha, cfg.beta, origin);

    Metrics m;
    std::ofstream* rout = cfg.results_path.empty() ? nullptr : &results_out;
    if (cfg.engine == "bic") {
        m = detail::drive_stream<BicEngine>(cfg, spec, workload, reader, first, rout);
    } else if (cfg.engine == "rwc") {
        m = detail::drive_stream<RwcEngine>(cfg, spec, workload, reader, first, rout);
    } else {
        m = detail::drive_stream<DfsEngine>(cfg, spec, workload, reader, first, rout);
    }
    if (!cfg.metrics_path.empty()) {
        std::ofstream mout(cfg.metrics_path);
        if (!mout) {
            throw std::runtime_error("cannot open metrics file for writing: " + cfg.metrics_path);
        }
        mout << nlohmann::json(m).dump(2) << '\n';
    }
    return m;
}

/// Recomputes every window from scratch and writes ground-truth results in
/// the same line format the engines emit.
inline std::vector<WindowResult> run_oracle(const RunConfig& cfg) {
    WindowSpec::create(cfg.alpha, cfg.beta);
    Workload workload{read_query_file(cfg.queries_path)};
    std::ifstream in(cfg.stream_path);
    if (!in) {
        throw std::runtime_error("cannot open stream file: " + cfg.stream_path);
    }
    std::vector<StreamingEdge> stream;
    StreamReader reader(in);
    while (auto e = reader.next()) {
        stream.push_back(*e);
    }
    Timestamp origin = (cfg.origin == OriginMode::FirstEdge && !stream.empty()) ? stream.front().ts : 0;
    WindowSpec spec = WindowSpec::create(cfg.alpha, cfg.beta, origin);
    auto results = oracle_all_windows(stream, spec, workload);
    if (!cfg.results_path.empty()) {
        std::ofstream out(cfg.results_path);
        if (!out) {
            throw std::runtime_error("cannot open results file for writing: " + cfg.results_path);
        }
        for (const auto& r : results) {
            out << serialize_window_result(r) << '\n';
        }
    }
    return results;
}

} // namespace swcc
