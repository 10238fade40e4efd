// Acceptance suite: exercises the engine end to end and prints one
// pass/fail line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "swcc/backward_auft.hpp"
#include "swcc/baselines.hpp"
#include "swcc/bfbg.hpp"
#include "swcc/driver.hpp"
#include "swcc/engine.hpp"
#include "swcc/generator.hpp"
#include "swcc/metrics.hpp"
#include "swcc/stream.hpp"
#include "swcc/union_find.hpp"

using namespace swcc;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) {
        ++g_failures;
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Worked-example stream (vertices A=1 .. M=13, J unused): two chunks of five
// unit slides; chunk 1's backward scan stores exactly six labeled tree edges
// and the published window answers follow.
constexpr VertexId A = 1, B = 2, C = 3, D = 4, E = 5, F = 6, G = 7, I = 9, K = 11, L = 12, M = 13;

std::vector<StreamingEdge> worked_stream() {
    return {
        {G, 8, 0}, {F, G, 1}, {B, D, 2}, {B, C, 3}, {B, E, 3}, {A, D, 4},
        {A, F, 4}, {A, D, 5}, {D, I, 5}, {D, G, 5}, {A, I, 6}, {K, L, 6},
        {K, C, 6}, {B, C, 6}, {L, M, 7}, {I, L, 8}, {M, I, 9},
    };
}

ChunkStore worked_chunk1() {
    auto spec = WindowSpec::create(5, 1);
    ChunkStore c(5);
    for (const auto& e : worked_stream()) {
        auto cc = chunk_coord(spec.slide_of(e.ts), 5);
        if (cc.chunk_index == 1) {
            c.add(cc.offset, e.u, e.v);
        }
    }
    return c;
}

template <class Engine>
std::vector<WindowResult> drive(const WindowSpec& spec, Engine& engine,
                                const std::vector<StreamingEdge>& stream, const Workload& wl,
                                std::vector<std::uint64_t>* latency_out = nullptr,
                                std::vector<MemoryCounters>* counters_out = nullptr) {
    std::vector<WindowResult> results;
    SlidingWindowDriver<Engine> driver(spec, engine, wl,
                                       [&](const WindowResult& r) { results.push_back(r); });
    for (const auto& e : stream) {
        driver.push(e);
    }
    driver.finish();
    if (latency_out) {
        *latency_out = driver.latency_samples_ns();
    }
    if (counters_out) {
        *counters_out = driver.counter_samples();
    }
    return results;
}

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    auto spec = WindowSpec::create(5, 1);

    auto b1 = BackwardAuft::build(worked_chunk1());
    std::set<std::tuple<VertexId, VertexId, std::uint64_t>> got;
    const std::set<std::tuple<VertexId, VertexId, std::uint64_t>> want{
        {A, D, 4}, {A, F, 4}, {B, C, 3}, {B, E, 3}, {A, B, 2}, {A, G, 1}};
    for (const auto& u : b1.stored_uftes()) {
        got.insert({u.parent, u.child, u.label});
    }

    Workload wl{{{C, G}, {I, C}}};
    BicEngine engine(spec);
    auto results = drive(spec, engine, worked_stream(), wl);

    bool queries_ok = results.size() == 6 && results[1] == WindowResult{1, {true, true}} &&
                      results[2] == WindowResult{2, {true, true}} &&
                      results[3] == WindowResult{3, {false, false}};
    double secs = seconds_since(t0);
    bool pass = got == want && queries_ok && secs < 1.0;
    report(1, "worked-example golden run", pass,
           std::string("tree edges ") + (got == want ? "as published" : "WRONG") +
               ", Q(C,G)@W2..W4 and Q(I,C)@W3 " + (queries_ok ? "exact" : "WRONG") + ", " +
               std::to_string(secs) + "s");
}

void criterion_2() {
    auto chunk = worked_chunk1();
    auto b1 = BackwardAuft::build(chunk);

    // naive baseline: one full union-find copy per snapshot, counting each
    // copy's tree edges (vertices minus components)
    std::uint64_t naive_total = 0;
    for (std::uint64_t j = 0; j < chunk.chunk_size(); ++j) {
        UnionFind uf;
        for (std::uint64_t s = chunk.chunk_size(); s-- > j;) {
            for (const auto& [u, v] : chunk.slide(s)) {
                uf.unite(u, v);
            }
        }
        naive_total += uf.vertex_count() - uf.component_count();
    }
    bool pass = b1.ufte_count() == 6 && naive_total == 24;
    report(2, "snapshot-isolation storage", pass,
           "stored=" + std::to_string(b1.ufte_count()) +
               " vs naive per-snapshot copies=" + std::to_string(naive_total));
}

void criterion_3() {
    auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t chunk_sizes[] = {2, 3, 5, 8, 10};
    const std::uint64_t edges_per_ts_options[] = {1, 10, 100};
    std::uint64_t mismatched_runs = 0, runs = 0, windows_total = 0;
    SplitMix64 seeder(0xACCE97);

    for (int stream_idx = 0; stream_idx < 200; ++stream_idx) {
        StreamGenConfig cfg;
        cfg.vertices = 50 + seeder.below(4951); // up to 5000
        cfg.edges = 1000 + seeder.below(49001); // up to 50000
        cfg.edges_per_ts = edges_per_ts_options[stream_idx % 3];
        cfg.seed = seeder.next();
        auto stream = gen_stream(cfg);
        Workload wl{gen_queries(stream, 100, seeder.next())};

        Timestamp span = stream.back().ts + 1;
        for (std::uint64_t cs : chunk_sizes) {
            std::uint64_t beta = std::max<std::uint64_t>(1, span / 40);
            WindowSpec spec = WindowSpec::create(beta * cs, beta);

            BicEngine engine(spec);
            auto got = drive(spec, engine, stream, wl);
            auto want = oracle_all_windows(stream, spec, wl);

            std::string got_lines, want_lines;
            for (const auto& r : got) {
                got_lines += serialize_window_result(r);
                got_lines += '\n';
            }
            for (const auto& r : want) {
                want_lines += serialize_window_result(r);
                want_lines += '\n';
            }
            if (got_lines != want_lines) {
                ++mismatched_runs;
            }
            ++runs;
            windows_total += want.size();
        }
    }
    double secs = seconds_since(t0);
    bool pass = mismatched_runs == 0 && secs < 300.0;
    report(3, "oracle equivalence on 200 random streams x 5 chunk sizes", pass,
           std::to_string(runs) + " runs, " + std::to_string(windows_total) + " windows, " +
               std::to_string(mismatched_runs) + " mismatched runs, " + std::to_string(secs) +
               "s");
}

// Violation tallies shared by criteria 4-6.
struct StructuralViolations {
    std::uint64_t depth = 0;
    std::uint64_t labels = 0;
    std::uint64_t interval_lists = 0;
};
StructuralViolations g_structural;

UnionFind rebuild_backward(const ChunkStore& chunk, std::uint64_t j) {
    UnionFind uf;
    for (std::uint64_t s = chunk.chunk_size(); s-- > j;) {
        for (const auto& [u, v] : chunk.slide(s)) {
            uf.unite(u, v);
        }
    }
    return uf;
}

void check_depth_bound(const UnionFind& uf) {
    const auto& parents = uf.parent_map();
    for (const auto& [v, p] : parents) {
        std::uint64_t hops = 0;
        VertexId cur = v;
        while (parents.at(cur) != cur) {
            cur = parents.at(cur);
            ++hops;
        }
        std::uint64_t bound =
            static_cast<std::uint64_t>(std::floor(std::log2(double(uf.size_of_root(cur))))) + 1;
        if (hops > bound) {
            ++g_structural.depth;
        }
    }
}

void check_label_monotonicity(const BackwardAuft& b) {
    std::unordered_map<VertexId, std::pair<VertexId, std::uint64_t>> up;
    for (const auto& e : b.stored_uftes()) {
        up[e.child] = {e.parent, e.label};
    }
    for (const auto& [child, pl] : up) {
        std::uint64_t prev = pl.second;
        VertexId cur = pl.first;
        while (up.count(cur)) {
            auto [nxt, label] = up.at(cur);
            if (label > prev) {
                ++g_structural.labels;
            }
            prev = label;
            cur = nxt;
        }
    }
}

void check_interval_lists(const Bfbg& g) {
    g.for_each_edge([&](VertexId, VertexId, const IntervalSet& ivs) {
        const auto& list = ivs.intervals();
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i].lo > list[i].hi) {
                ++g_structural.interval_lists;
            }
            if (i + 1 < list.size() && list[i].hi + 1 >= list[i + 1].lo) {
                ++g_structural.interval_lists;
            }
        }
    });
}

void criteria_4_5_6() {
    SplitMix64 rng(0xC4C5C6);
    std::uint64_t find_mismatches = 0, member_mismatches = 0, checks_4 = 0;
    std::uint64_t closure_mismatches = 0, checks_5 = 0;

    for (int iter = 0; iter < 100; ++iter) {
        std::uint64_t cs = 2 + rng.below(7); // chunk sizes 2..8
        std::uint64_t vertex_range = 5 + rng.below(60);

        ChunkStore chunk(cs);
        std::uint64_t n_edges = rng.below(501);
        for (std::uint64_t i = 0; i < n_edges; ++i) {
            chunk.add(rng.below(cs), 1 + rng.below(vertex_range), 1 + rng.below(vertex_range));
        }
        auto b = BackwardAuft::build(chunk);
        check_label_monotonicity(b);

        // criterion 4: every (vertex, snapshot) agrees with a naive rebuild
        for (std::uint64_t j = 1; j < cs; ++j) {
            auto naive = rebuild_backward(chunk, j);
            check_depth_bound(naive);
            for (VertexId v = 1; v <= vertex_range; ++v) {
                bool want_member = naive.contains(v);
                if (b.contains_at(v, j) != want_member) {
                    ++member_mismatches;
                }
                if (want_member && b.find_root_at(v, j) != naive.find(v)) {
                    ++find_mismatches;
                }
                ++checks_4;
            }
        }

        // criterion 5: pair with a random successor chunk and compare
        // cross-buffer reachability against the shared-vertex closure
        ChunkStore succ(cs);
        std::uint64_t succ_edges = rng.below(501);
        for (std::uint64_t i = 0; i < succ_edges; ++i) {
            succ.add(rng.below(cs), 1 + rng.below(vertex_range), 1 + rng.below(vertex_range));
        }
        UnionFind fwd;
        for (std::uint64_t t = 0; t + 1 < cs; ++t) {
            std::uint64_t j = t + 1;
            for (const auto& [u, v] : succ.slide(t)) {
                fwd.unite(u, v);
            }
            Bfbg g;
            for (const auto& [v, _] : fwd.parent_map()) {
                if (b.contains_at(v, j)) {
                    for (const auto& e : b.compute_edges_and_intervals(j, v, *fwd.find(v))) {
                        g.insert(e);
                    }
                }
            }
            check_interval_lists(g);

            auto nb = rebuild_backward(chunk, j);
            const std::uint64_t back_tag = 10000000, fwd_tag = 20000000;
            UnionFind closure;
            for (const auto& [v, _] : nb.parent_map()) {
                closure.unite(v, *nb.find(v) + back_tag);
            }
            for (const auto& [v, _] : fwd.parent_map()) {
                closure.unite(v, *fwd.find(v) + fwd_tag);
            }
            std::vector<RootRef> roots;
            for (const auto& [v, _] : nb.parent_map()) {
                if (nb.find(v) == v) {
                    roots.push_back(backward_root(v));
                }
            }
            for (const auto& [v, _] : fwd.parent_map()) {
                if (fwd.find(v) == v) {
                    roots.push_back(forward_root(v));
                }
            }
            for (const auto& r1 : roots) {
                for (const auto& r2 : roots) {
                    std::uint64_t t1 =
                        r1.id + (r1.side == BufferSide::Backward ? back_tag : fwd_tag);
                    std::uint64_t t2 =
                        r2.id + (r2.side == BufferSide::Backward ? back_tag : fwd_tag);
                    bool expected = closure.find(t1) == closure.find(t2);
                    bool got = g.connected(r1, r2, j);
                    ++checks_5;
                    if (g.contains(r1) && g.contains(r2)) {
                        if (got != expected) {
                            ++closure_mismatches;
                        }
                    } else if (got || (expected && !(r1 == r2))) {
                        // a root without bipartite edges reaches nothing, and
                        // nothing but itself may be connected to it
                        ++closure_mismatches;
                    }
                }
            }
        }
    }

    report(4, "snapshot forest faithfulness on 100 random chunks",
           find_mismatches == 0 && member_mismatches == 0,
           std::to_string(checks_4) + " (vertex,snapshot) checks, " +
               std::to_string(find_mismatches) + " find and " +
               std::to_string(member_mismatches) + " membership mismatches");
    report(5, "bipartite-graph reachability vs shared-vertex closure", closure_mismatches == 0,
           std::to_string(checks_5) + " root-pair checks, " +
               std::to_string(closure_mismatches) + " mismatches");
    report(6, "structural invariants (depth bound, label order, interval lists)",
           g_structural.depth == 0 && g_structural.labels == 0 &&
               g_structural.interval_lists == 0,
           "depth=" + std::to_string(g_structural.depth) +
               " label=" + std::to_string(g_structural.labels) +
               " interval=" + std::to_string(g_structural.interval_lists) + " violations");
}

void criteria_7_8_9() {
    auto t0 = std::chrono::steady_clock::now();

    // 2M edges at ~100 per timestamp; window 2000 time units (~200k edges),
    // slide 100 (~10k edges), 20 slides per chunk. The seed keeps the stream
    // within slides 0..199, so 9 of the 181 windows carry a backward build.
    StreamGenConfig cfg{100000, 2000000, 100, 1};
    auto stream = gen_stream(cfg);
    Workload wl{gen_queries(stream, 100, 42)};
    auto spec = WindowSpec::create(2000, 100);

    BicEngine bic(spec);
    std::vector<std::uint64_t> bic_latency;
    auto b0 = std::chrono::steady_clock::now();
    auto bic_results = drive(spec, bic, stream, wl, &bic_latency);
    double bic_secs = seconds_since(b0);

    RwcEngine rwc(spec);
    std::vector<std::uint64_t> rwc_latency;
    std::vector<MemoryCounters> rwc_counters;
    auto r0 = std::chrono::steady_clock::now();
    auto rwc_results = drive(spec, rwc, stream, wl, &rwc_latency, &rwc_counters);
    double rwc_secs = seconds_since(r0);

    double bic_throughput = double(stream.size()) / bic_secs;
    double rwc_throughput = double(stream.size()) / rwc_secs;
    std::uint64_t bic_p95 = percentile(bic_latency, 0.95);
    std::uint64_t bic_p99 = percentile(bic_latency, 0.99);
    std::uint64_t rwc_p95 = percentile(rwc_latency, 0.95);

    bool equivalent = bic_results == rwc_results;
    double total_secs = seconds_since(t0);
    bool pass7 = equivalent && bic_throughput >= 2.0 * rwc_throughput &&
                 double(bic_p95) <= 0.2 * double(rwc_p95) && total_secs < 600.0;
    report(7, "desk-scale throughput and tail latency vs recompute", pass7,
           "throughput " + std::to_string(std::uint64_t(bic_throughput)) + " vs " +
               std::to_string(std::uint64_t(rwc_throughput)) + " edges/s (" +
               std::to_string(bic_throughput / rwc_throughput) + "x), P95 " +
               std::to_string(bic_p95) + " vs " + std::to_string(rwc_p95) + " ns, " +
               std::to_string(bic_latency.size()) + " windows, " +
               (equivalent ? "results identical" : "RESULTS DIFFER") + ", " +
               std::to_string(total_secs) + "s");

    double shape = double(bic_p99) / double(bic_p95);
    report(8, "chunk-close builds land in P99 but not P95", shape >= 5.0,
           "BIC P99/P95 = " + std::to_string(bic_p99) + "/" + std::to_string(bic_p95) + " = " +
               std::to_string(shape) + "x");

    // window vertex count read off the recompute engine's per-window structures
    std::uint64_t max_window_vertices = 0;
    for (const auto& c : rwc_counters) {
        max_window_vertices = std::max(max_window_vertices, c.forward_nodes);
    }
    double bound = 4.0 * (std::log2(double(max_window_vertices)) + 1.0);
    auto bic_ops = bic.total_ops();
    double bic_hops_per_edge = double(bic_ops.hops) / double(stream.size());

    bool rwc_linear = true;
    for (const auto& w : rwc.window_stats()) {
        if (w.window_edges == 0) {
            continue;
        }
        if (w.find_calls < w.window_edges || w.hops < w.window_edges / 4) {
            rwc_linear = false;
        }
    }
    bool pass9 = bic_hops_per_edge <= bound && rwc_linear;
    report(9, "amortized hop counters", pass9,
           "BIC " + std::to_string(bic_hops_per_edge) + " hops/edge <= bound " +
               std::to_string(bound) + " (window vertices " +
               std::to_string(max_window_vertices) + "); recompute hops per window " +
               (rwc_linear ? "scale with" : "DO NOT scale with") + " window edges");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criteria_4_5_6();
    criteria_7_8_9();
    if (g_failures == 0) {
        std::printf("all criteria passed\n");
    } else {
        std::printf("%d criteria FAILED\n", g_failures);
    }
    return g_failures;
}
