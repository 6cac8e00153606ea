#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mbqc/lattice.hpp"
#include "mbqc/node_window.hpp"
#include "mbqc/path_pattern.hpp"
#include "mbqc/search.hpp"
#include "mbqc/timing.hpp"

namespace mbqc {

enum class OutcomeMode { Random, Zero };

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
    Algorithm algorithm{Algorithm::Gbfs};
    PathRules path_rules{PathRules::Loose};
    int height{20};
    int block_width{5};
    std::int64_t width{2000};
    double p{0.75};
    int reps{1000};
    std::uint64_t master_seed{0x5EED};
    Duration clock_period{Duration::from_ns(1.0)};
    OutcomeMode outcomes{OutcomeMode::Random};
    bool trace{false};

    /// Throws ConfigError.
    void validate() const;
    LatticeParams lattice() const { return {height, p, width}; }
};

enum class Termination { ReachedEnd, NoRightNode, SearchDeath };

const char *to_string(Termination t);

struct TrialResult {
    std::uint64_t seed{0};
    std::int64_t max_depth{0};
    Termination termination{Termination::ReachedEnd};
    /// Index 0 is the warm-up GBFS over the initial block.
    std::vector<MemCounters> per_cycle_counters;
    Byproduct final_byproduct{};
    std::string trace;

    bool operator==(const TrialResult &) const = default;
};

/// Warm-up cycles skipped by the write statistics.
inline constexpr std::size_t kWarmupCycles = 1;

/**
 * The classical controller for one trial: ring buffer, path, search state and
 * the random streams. Each cycle is split in two so a quantum simulator can
 * entangle the next column between planning and measuring:
 *
 *     fill();
 *     while (plan_cycle()) measure(source);
 *
 * plan_cycle() pushes a column (except on the first call), searches, extends
 * the path and writes the pattern. It returns false when the trial ends.
 */
class Controller {
public:
    Controller(const ExperimentConfig &cfg, std::uint64_t seed,
               GateProgram program = GateProgram::identity());

    void fill();
    bool plan_cycle();
    void measure(const OutcomeSource &source);
    /// measure() with the configured random or all-zero outcomes.
    void measure_default();

    /// Column that measure() will measure out.
    std::int64_t measure_column_index() const { return window_.block_first(); }
    std::optional<Termination> termination() const { return termination_; }
    std::int64_t depth() const;

    const NodeWindow &window() const { return window_; }
    const PathState &path() const { return path_; }
    const SearchState &search_state() const { return search_; }
    GateProgram &program() { return program_; }
    const std::vector<MemCounters> &cycle_counters() const { return cycles_; }
    const std::string &trace() const { return trace_; }
    const ExperimentConfig &config() const { return cfg_; }

private:
    void close_cycle();
    void append_trace();

    ExperimentConfig cfg_;
    NodeWindow window_;
    PathState path_;
    SearchState search_;
    GateProgram program_;
    std::mt19937_64 edge_rng_;
    std::mt19937_64 choice_rng_;
    std::mt19937_64 outcome_rng_;
    std::optional<Termination> termination_;
    bool warmed_up_{false};
    bool cycle_open_{false};
    bool planned_{false};
    std::vector<MemCounters> cycles_;
    std::string trace_;
};

TrialResult run_trial(const ExperimentConfig &cfg, std::uint64_t seed);

/// Pooled mean / max of predecessor writes over all non-warm-up cycles.
struct WriteStats {
    double mean{0.0};
    double max{0.0};
    std::uint64_t cycles{0};
};

WriteStats pred_write_stats(const std::vector<TrialResult> &trials);

/// Runs cfg.reps trials with seeds trial_seed(cfg.master_seed, i).
std::vector<TrialResult> run_trials(const ExperimentConfig &cfg);

struct SweepRow {
    Algorithm algorithm{Algorithm::Gbfs};
    double p{0.0};
    int block_width{0};
    int height{0};
    std::int64_t width{0};
    int reps{0};
    double mean_depth{0.0};
    double depth_stddev{0.0};
    double mean_pred_writes{0.0};
    double max_pred_writes{0.0};
};

struct SweepGrid {
    std::vector<Algorithm> algorithms{Algorithm::Gbfs};
    std::vector<double> ps;
    std::vector<int> block_widths;
};

/// One row per (algorithm, p, B) in that nesting order. Trials of every point
/// use the same seeds, so algorithms are compared on identical lattices.
std::vector<SweepRow> run_sweep(const ExperimentConfig &base, const SweepGrid &grid);

inline constexpr std::string_view kSweepCsvHeader =
    "alg,p,B,H,W,reps,mean_depth,mean_pred_writes,max_pred_writes";

std::string sweep_to_csv(const std::vector<SweepRow> &rows);
std::vector<SweepRow> sweep_from_csv(std::string_view csv);

struct FailureCase {
    std::uint64_t seed{0};
    std::uint64_t seed_index{0};
    std::int64_t ibfs_depth{0}; ///< column where IBFS stopped
    std::int64_t gbfs_depth{0};
    Termination ibfs_termination{Termination::NoRightNode};
    std::string trace; ///< per-cycle IBFS trace
};

/// Looks for a seed on which IBFS dies while GBFS, on the same edge stream,
/// gets past that column. Returns nullopt if none among `max_seeds` seeds.
std::optional<FailureCase> find_failure_case(const ExperimentConfig &cfg, std::uint64_t max_seeds);

/// Parses "a,b,c" or "start:stop:step" (inclusive) into values.
std::vector<double> parse_double_list(std::string_view spec);
std::vector<int> parse_int_list(std::string_view spec);

} // namespace mbqc
