#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "swcc/generator.hpp"
#include "swcc/metrics.hpp"
#include "swcc/runner.hpp"

namespace {

swcc::OriginMode parse_origin(const std::string& s) {
    if (s == "zero") {
        return swcc::OriginMode::Zero;
    }
    if (s == "first-edge") {
        return swcc::OriginMode::FirstEdge;
    }
    throw swcc::ConfigError("unknown origin mode '" + s + "' (expected zero or first-edge)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sliding-window graph connectivity engine and benchmark harness"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "stream a file through an engine and report metrics");
    swcc::RunConfig run_cfg;
    std::string origin = "zero";
    run_cmd->add_option("--stream", run_cfg.stream_path, "edge stream file")->required();
    run_cmd->add_option("--queries", run_cfg.queries_path, "query workload file")->required();
    run_cmd->add_option("--window", run_cfg.alpha, "window size in time units")->required();
    run_cmd->add_option("--slide", run_cfg.beta, "slide interval in time units")->required();
    run_cmd->add_option("--engine", run_cfg.engine, "bic, rwc, or dfs")
        ->check(CLI::IsMember({"bic", "rwc", "dfs"}));
    run_cmd->add_option("--output", run_cfg.metrics_path, "metrics JSON file");
    run_cmd->add_option("--results", run_cfg.results_path, "per-window results JSONL file");
    run_cmd->add_option("--origin", origin, "slide-0 reference: zero or first-edge")
        ->check(CLI::IsMember({"zero", "first-edge"}));

    // oracle
    auto* oracle_cmd =
        app.add_subcommand("oracle", "recompute every window from scratch (ground truth)");
    swcc::RunConfig oracle_cfg;
    std::string oracle_origin = "zero";
    oracle_cmd->add_option("--stream", oracle_cfg.stream_path, "edge stream file")->required();
    oracle_cmd->add_option("--queries", oracle_cfg.queries_path, "query workload file")->required();
    oracle_cmd->add_option("--window", oracle_cfg.alpha, "window size in time units")->required();
    oracle_cmd->add_option("--slide", oracle_cfg.beta, "slide interval in time units")->required();
    oracle_cmd->add_option("--results", oracle_cfg.results_path, "results JSONL file")->required();
    oracle_cmd->add_option("--origin", oracle_origin, "slide-0 reference: zero or first-edge")
        ->check(CLI::IsMember({"zero", "first-edge"}));

    // gen-stream
    auto* gen_cmd = app.add_subcommand("gen-stream", "write a seeded random edge stream");
    swcc::StreamGenConfig gen_cfg;
    std::string gen_out;
    gen_cmd->add_option("--vertices", gen_cfg.vertices, "vertex id range")->required();
    gen_cmd->add_option("--edges", gen_cfg.edges, "number of edges")->required();
    gen_cmd->add_option("--edges-per-ts", gen_cfg.edges_per_ts, "mean edges per timestamp")
        ->default_val(100);
    gen_cmd->add_option("--seed", gen_cfg.seed, "random seed")->default_val(1);
    gen_cmd->add_option("--output", gen_out, "stream file to write")->required();

    // gen-queries
    auto* genq_cmd = app.add_subcommand("gen-queries", "sample a query workload from a stream");
    std::string genq_stream, genq_out;
    std::uint64_t genq_count = 100, genq_seed = 1;
    genq_cmd->add_option("--stream", genq_stream, "edge stream file")->required();
    genq_cmd->add_option("--count", genq_count, "number of query pairs")->default_val(100);
    genq_cmd->add_option("--seed", genq_seed, "random seed")->default_val(1);
    genq_cmd->add_option("--output", genq_out, "query file to write")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            run_cfg.origin = parse_origin(origin);
            swcc::Metrics m = swcc::run(run_cfg);
            std::cout << "edges=" << m.total_edges << " windows=" << m.latency_samples_ns.size()
                      << " throughput=" << static_cast<std::uint64_t>(m.throughput_edges_per_sec)
                      << " edges/s p50=" << m.p50_ns << "ns p95=" << m.p95_ns << "ns p99="
                      << m.p99_ns << "ns\n";
        } else if (oracle_cmd->parsed()) {
            oracle_cfg.origin = parse_origin(oracle_origin);
            auto results = swcc::run_oracle(oracle_cfg);
            std::cout << "windows=" << results.size() << "\n";
        } else if (gen_cmd->parsed()) {
            auto edges = swcc::gen_stream(gen_cfg);
            swcc::write_stream_file(gen_out, gen_cfg, edges);
            std::cout << "wrote " << edges.size() << " edges, last timestamp "
                      << (edges.empty() ? 0 : edges.back().ts) << "\n";
        } else if (genq_cmd->parsed()) {
            std::ifstream in(genq_stream);
            if (!in) {
                throw std::runtime_error("cannot open stream file: " + genq_stream);
            }
            std::vector<swcc::StreamingEdge> stream;
            swcc::StreamReader reader(in);
            while (auto e = reader.next()) {
                stream.push_back(*e);
            }
            swcc::write_query_file(genq_out, swcc::gen_queries(stream, genq_count, genq_seed));
            std::cout << "wrote " << genq_count << " queries\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
