// End-to-end acceptance checks. One PASS/FAIL line per criterion; exit code 1
// if any fails. Tolerances are fixed here and not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "mbqc/experiment.hpp"
#include "mbqc/rng.hpp"
#include "mbqc/timing.hpp"
#include "mbqc/verify.hpp"
#include "oracles.hpp"

using namespace mbqc;

namespace {

int failures = 0;

void report(const char *name, bool ok, const std::string &detail) {
    std::printf("%s  %-28s %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
    std::fflush(stdout);
    if (!ok) {
        ++failures;
    }
}

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double mean_depth(const std::vector<TrialResult> &trials) {
    double s = 0.0;
    for (const auto &t : trials) {
        s += static_cast<double>(t.max_depth);
    }
    return s / static_cast<double>(trials.size());
}

ExperimentConfig base(Algorithm alg, double p, int block, int height, std::int64_t width, int reps) {
    ExperimentConfig c;
    c.algorithm = alg;
    c.p = p;
    c.block_width = block;
    c.height = height;
    c.width = width;
    c.reps = reps;
    c.master_seed = 20240601;
    return c;
}

void write_asymptotes() {
    for (const Algorithm alg : {Algorithm::Gbfs, Algorithm::Ibfs}) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto trials = run_trials(base(alg, 0.99, 5, 20, 400, 1000));
        const WriteStats ws = pred_write_stats(trials);
        const double secs = seconds_since(t0);
        std::size_t short_trials = 0;
        for (const auto &t : trials) {
            if (t.per_cycle_counters.size() < 100 + kWarmupCycles) {
                ++short_trials;
            }
        }
        const bool gbfs = alg == Algorithm::Gbfs;
        const double lo = gbfs ? 190.0 : 18.0;
        const double hi = gbfs ? 210.0 : 22.0;
        const double per_trial = static_cast<double>(ws.cycles) / static_cast<double>(trials.size());
        const bool ok = ws.mean >= lo && ws.mean <= hi && per_trial >= 100.0 && secs < 60.0;
        report(gbfs ? "gbfs_write_asymptote" : "ibfs_write_asymptote", ok,
               fmt("mean W_pred %.3f in [%g, %g], %.1f cycles/trial (%zu trials < 100), %.1f s",
                   ws.mean, lo, hi, per_trial, short_trials, secs));
    }
}

void gbfs_depth() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto trials = run_trials(base(Algorithm::Gbfs, 0.75, 5, 20, 2000, 1000));
    const double d = mean_depth(trials);
    const double secs = seconds_since(t0);
    report("gbfs_depth_p075", d >= 800.0 && d <= 1200.0 && secs < 300.0,
           fmt("mean depth %.1f in [800, 1200], %.1f s", d, secs));
}

void saturation() {
    bool ok = true;
    std::string detail;
    for (const Algorithm alg : {Algorithm::Gbfs, Algorithm::Ibfs}) {
        for (const double p : {1.0, 0.0}) {
            const std::int64_t width = 300;
            const auto trials = run_trials(base(alg, p, 5, 20, width, 100));
            const std::int64_t want = p == 1.0 ? width : 0;
            int hits = 0;
            for (const auto &t : trials) {
                hits += t.max_depth == want;
            }
            ok = ok && hits == static_cast<int>(trials.size());
            detail += fmt("%s p=%g %d/%zu  ", to_string(alg), p, hits, trials.size());
        }
    }
    report("saturation_degeneracy", ok, detail);
}

void ibfs_inferiority() {
    bool ok = true;
    std::string detail;
    for (const double p : {0.6, 0.7, 0.8, 0.9, 0.95}) {
        const double g = mean_depth(run_trials(base(Algorithm::Gbfs, p, 5, 20, 2000, 200)));
        const double i = mean_depth(run_trials(base(Algorithm::Ibfs, p, 5, 20, 2000, 200)));
        ok = ok && i < 0.5 * g;
        detail += fmt("p=%g %.1f/%.1f  ", p, i, g);
    }
    report("ibfs_inferiority", ok, detail + "(ibfs/gbfs mean depth, gate < 0.5)");
}

void failure_case() {
    ExperimentConfig c = base(Algorithm::Ibfs, 0.9, 4, 9, 2000, 1);
    const auto fc = find_failure_case(c, 100);
    if (!fc) {
        report("ibfs_failure_case", false, "no case within 100 seeds");
        return;
    }
    report("ibfs_failure_case", fc->gbfs_depth > fc->ibfs_depth && !fc->trace.empty(),
           fmt("seed index %llu: ibfs stops at %lld (%s), gbfs reaches %lld",
               static_cast<unsigned long long>(fc->seed_index), static_cast<long long>(fc->ibfs_depth),
               to_string(fc->ibfs_termination), static_cast<long long>(fc->gbfs_depth)));
}

void timing_identities() {
    const Duration tp = Duration::from_ns(1.0);
    const double a = write_time_bound(tp, 200).picoseconds();
    const double b = write_time_bound(tp, 20).picoseconds();
    const double c = clock_floor(Duration::from_ps(150.0), 200).nanoseconds();
    report("timing_identities", a == 5.0 && b == 50.0 && c == 30.0,
           fmt("%.17g ps, %.17g ps, %.17g ns", a, b, c));
}

void gbfs_oracle() {
    std::mt19937_64 rng(99);
    int mismatched_dist = 0;
    int mismatched_right = 0;
    int with_right = 0;
    const int blocks = 1000;
    for (int k = 0; k < blocks; ++k) {
        const int h = std::uniform_int_distribution<int>(2, 8)(rng);
        const int b = std::uniform_int_distribution<int>(2, 5)(rng);
        const double p = 0.3 + 0.1 * std::uniform_int_distribution<int>(0, 6)(rng);
        const LatticeParams lp{h, p, 1000};
        NodeWindow w(h, b);
        std::vector<ColumnEdges> cols;
        // Skip ahead so the block does not start at column 0.
        const std::int64_t first = std::uniform_int_distribution<int>(1, 3)(rng);
        for (std::int64_t x = 0; x < first + b; ++x) {
            ColumnEdges e = generate_column(rng, lp, x);
            w.push_column(e);
            if (x >= first) {
                cols.push_back(e);
            }
        }
        const int root_row = std::uniform_int_distribution<int>(0, h - 1)(rng);
        const Coord root{w.block_first(), root_row};
        const SearchOutcome out = gbfs_search(w, root);
        const auto dist = oracle::bfs(h, cols, 0, root_row);
        bool reach_last = false;
        for (int i = 0; i < b; ++i) {
            for (int y = 0; y < h; ++y) {
                if (w.peek({w.block_first() + i, y}).distance != dist[i][y]) {
                    ++mismatched_dist;
                }
            }
        }
        for (int y = 0; y < h; ++y) {
            reach_last = reach_last || dist[b - 1][y] >= 0;
        }
        // A right node is a column-1 node on a shortest path from the root to
        // the last column.
        bool flagged_ok = true;
        for (int y = 0; y < h; ++y) {
            const bool flagged = w.peek({w.block_first() + 1, y}).right_node;
            if (!flagged) {
                continue;
            }
            bool on_shortest = false;
            const auto from = oracle::bfs(h, cols, 1, y);
            for (int t = 0; t < h; ++t) {
                if (from[b - 1][t] >= 0 && dist[1][y] >= 0 &&
                    dist[b - 1][t] == dist[1][y] + from[b - 1][t]) {
                    on_shortest = true;
                }
            }
            flagged_ok = flagged_ok && on_shortest;
        }
        with_right += out.right_nodes_found;
        if (out.right_nodes_found != reach_last || !flagged_ok) {
            ++mismatched_right;
        }
    }
    report("gbfs_oracle_equivalence", mismatched_dist == 0 && mismatched_right == 0,
           fmt("%d blocks, %d distance mismatches, %d right-node mismatches (%d with right node)",
               blocks, mismatched_dist, mismatched_right, with_right));
}

void quantum_master() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 1.0;
    std::size_t columns = 0;
    std::size_t trials = 0;
    double drift = 0.0;
    for (const double p : {0.85, 1.0}) {
        for (const AngleMode mode : {AngleMode::Identity, AngleMode::Random}) {
            ExperimentConfig c = base(Algorithm::Gbfs, p, 5, 7, 60, 1);
            for (int i = 0; i < 10; ++i) {
                const auto r = simulate_path(c, trial_seed(c.master_seed, i), mode, {});
                ++trials;
                drift = std::max(drift, r.max_norm_drift);
                for (const auto &cf : r.fidelities) {
                    worst = std::min(worst, cf.fidelity);
                    ++columns;
                }
            }
        }
    }
    const double secs = seconds_since(t0);
    report("quantum_master_check", worst >= 1.0 - 1e-9 && columns >= 500 && secs < 600.0,
           fmt("min fidelity %.12f over %zu columns in %zu trials, norm drift %.1e, %.1f s", worst,
               columns, trials, drift, secs));
}

// Runs the local pattern on a complete 3x3 cluster with a horizontal path
// through the middle row and forced outcomes.
void one_qubit_pattern_brute_force() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    double worst = 1.0;
    int bad_byproduct = 0;
    int cases = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const double phi0 = angle(rng);
        const double phi1 = angle(rng);
        const Qubit in = Qubit::random(rng);
        for (int bits = 0; bits < 64; ++bits) {
            // (m0, p0, q0, m1, p1, q1)
            auto bit = [&](int i) { return ((bits >> i) & 1) != 0; };
            const std::map<Coord, bool> forced{{{0, 1}, bit(0)}, {{0, 0}, bit(1)}, {{0, 2}, bit(2)},
                                               {{1, 1}, bit(3)}, {{1, 0}, bit(4)}, {{1, 2}, bit(5)}};
            NodeWindow w(3, 3);
            for (int x = 0; x < 3; ++x) {
                w.push_column(ColumnEdges::complete(3, x == 0));
            }
            GateProgram prog = GateProgram::fixed({phi0, phi1, 0.0});
            PathState path;
            start_path(w, path, {0, 1}, prog);
            path.nodes.push_back({1, 1});
            path.nodes.push_back({2, 1});
            path.depth = 2;
            generate_pattern(w, path, 1, prog);

            QuantumState st(9);
            add_column(st, w, 0, InputOverride{1, in});
            add_column(st, w, 1);
            add_column(st, w, 2);
            std::mt19937_64 unused(0);
            const OutcomeSource src = [&](const MeasurementRequest &req) {
                const bool m = forced.at(req.node);
                const MeasurementBasis basis =
                    req.xy_plane ? MeasurementBasis::xy(req.angle) : MeasurementBasis::z();
                return st.measure(*st.slot_of(req.node), basis, unused, m);
            };
            measure_column(w, 0, src, path, PathRules::Induced);
            measure_column(w, 1, src, path, PathRules::Induced);
            // The two corners beside the output belong to the next segment.
            st.measure(*st.slot_of({2, 0}), MeasurementBasis::z(), unused, false);
            st.measure(*st.slot_of({2, 2}), MeasurementBasis::z(), unused, false);
            const Qubit out = st.single_qubit();

            const bool x = bit(3) != bit(4) != bit(5);
            const bool z = bit(0) != bit(1) != bit(2);
            oracle::Mat2 u = oracle::mul(oracle::rx(phi1), oracle::rz(phi0));
            if (z) u = oracle::mul(oracle::pauli_z(), u);
            if (x) u = oracle::mul(oracle::pauli_x(), u);
            const auto want = oracle::apply(u, {in.a0, in.a1});
            worst = std::min(worst, oracle::overlap(want, {out.a0, out.a1}));
            bad_byproduct += !(path.byproduct == Byproduct{x, z});
            ++cases;
        }
    }
    report("one_qubit_pattern_brute_force", 1.0 - worst <= 1e-10 && bad_byproduct == 0,
           fmt("%d cases, max infidelity %.2e, %d byproduct mismatches", cases, 1.0 - worst,
               bad_byproduct));
}

void verification_incompatibility() {
    std::mt19937_64 rng(11);
    const int shots = 10000;
    auto run = [&](bool entangled) {
        std::map<int, int> seen;
        for (int s = 0; s < shots; ++s) {
            QuantumState st(4);
            st.add_qubit({0, 0}); // a0
            st.add_qubit({1, 0}); // a1
            st.cz(0, 1);
            if (entangled) {
                st.add_qubit({0, 1}); // a2
                st.add_qubit({1, 1}); // a3
                st.cz(0, 2);
                st.cz(1, 3);
                st.cz(2, 3);
            }
            const bool m1 = st.measure(*st.slot_of({1, 0}), MeasurementBasis::z(), rng);
            const bool m0 = st.measure(*st.slot_of({0, 0}), MeasurementBasis::xy(0.0), rng);
            ++seen[(m1 ? 2 : 0) + (m0 ? 1 : 0)];
        }
        return seen;
    };
    const auto two = run(false);
    const auto four = run(true);
    const bool ok = two.size() == 2 && two.count(0) && two.count(3) && four.size() == 4;
    auto show = [](const std::map<int, int> &m) {
        std::string s;
        for (const auto &[k, v] : m) {
            s += fmt("%d%d:%d ", k >> 1, k & 1, v);
        }
        return s;
    };
    report("verification_incompatibility", ok, "2q " + show(two) + "| 4q " + show(four));
}

void noise_trend() {
    EsimConfig ec;
    ec.base = base(Algorithm::Gbfs, 0.9, 5, 7, 40, 1);
    ec.sigmas = {0.0, 0.02, 0.05, 0.1};
    ec.reps = 200;
    ec.angles = AngleMode::Identity;
    const auto t0 = std::chrono::steady_clock::now();
    const auto pts = run_esim(ec);
    std::map<std::int64_t, std::map<double, FidelityPoint>> grid;
    for (const auto &pt : pts) {
        grid[pt.column][pt.sigma] = pt;
    }
    const std::vector<std::int64_t> checked{10, 20, 30};
    bool ok = true;
    std::string detail;
    for (const std::int64_t col : checked) {
        const auto it = grid.find(col);
        if (it == grid.end() || it->second.size() != ec.sigmas.size()) {
            ok = false;
            detail += fmt("col %lld missing  ", static_cast<long long>(col));
            continue;
        }
        const auto &row = it->second;
        ok = ok && std::abs(row.at(0.0).mean_fidelity - 1.0) <= 1e-9;
        detail += fmt("col %lld:", static_cast<long long>(col));
        for (std::size_t i = 0; i < ec.sigmas.size(); ++i) {
            const FidelityPoint &a = row.at(ec.sigmas[i]);
            detail += fmt(" %.4f", a.mean_fidelity);
            if (i + 1 == ec.sigmas.size()) {
                continue;
            }
            const FidelityPoint &b = row.at(ec.sigmas[i + 1]);
            const double se = std::sqrt(a.stddev * a.stddev / static_cast<double>(a.survivors) +
                                        b.stddev * b.stddev / static_cast<double>(b.survivors));
            ok = ok && a.mean_fidelity - b.mean_fidelity > 3.0 * se;
        }
        detail += "  ";
    }
    report("noise_trend", ok, detail + fmt("%.1f s", seconds_since(t0)));
}

} // namespace

int main() {
    const std::vector<std::function<void()>> checks{
        write_asymptotes,  gbfs_depth,   saturation,     ibfs_inferiority,
        failure_case,      timing_identities,            gbfs_oracle,
        quantum_master,    one_qubit_pattern_brute_force,
        verification_incompatibility, noise_trend};
    for (const auto &check : checks) {
        try {
            check();
        } catch (const std::exception &e) {
            report("exception", false, e.what());
        }
    }
    std::printf("%s: %d failing\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
