#include "mbqc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>

#include "mbqc/rng.hpp"

namespace mbqc {

void ExperimentConfig::validate() const {
    try {
        lattice().validate(block_width);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    if (reps < 1) {
        throw ConfigError("reps must be at least 1");
    }
    if (!(clock_period.picoseconds() > 0.0)) {
        throw ConfigError("clock period must be positive");
    }
}

const char *to_string(Termination t) {
    switch (t) {
    case Termination::ReachedEnd: return "reached_end";
    case Termination::NoRightNode: return "no_right_node";
    case Termination::SearchDeath: return "search_death";
    }
    return "?";
}

Controller::Controller(const ExperimentConfig &cfg, std::uint64_t seed, GateProgram program)
    : cfg_(cfg), window_((cfg.validate(), cfg.height), cfg.block_width), program_(std::move(program)),
      edge_rng_(make_stream(seed, Stream::Edges)), choice_rng_(make_stream(seed, Stream::Choices)),
      outcome_rng_(make_stream(seed, Stream::Outcomes)) {
    search_.algorithm = cfg.algorithm;
    search_.rules = cfg.path_rules;
}

void Controller::fill() {
    if (!window_.empty()) {
        throw std::logic_error("controller already filled");
    }
    window_.reset_counters();
    const LatticeParams lat = cfg_.lattice();
    for (std::int64_t x = 0; x < cfg_.block_width; ++x) {
        window_.push_column(generate_column(edge_rng_, lat, x));
    }
    const Coord root{0, cfg_.height / 2};
    start_path(window_, path_, root, program_);
    search_.root = root;
    cycle_open_ = true;
}

bool Controller::plan_cycle() {
    if (termination_ || window_.empty()) {
        return false;
    }
    if (warmed_up_) {
        window_.reset_counters();
        const std::int64_t x = window_.next_x();
        if (x >= cfg_.width) {
            termination_ = Termination::ReachedEnd;
            return false;
        }
        cycle_open_ = true;
        window_.push_column(generate_column(edge_rng_, cfg_.lattice(), x));
        // Measured-out left neighbours act on the new column through their CZ.
        for (int y = 0; y < window_.height(); ++y) {
            const Coord c{x, y};
            if (window_.has_edge(c, Direction::Left)) {
                const NodeRecord &left = window_.peek({x - 1, y});
                if (left.measured && left.outcome) {
                    window_.set_carried_z(c, !window_.peek(c).carried_z);
                }
            }
        }
        cut_out_new_column(window_, path_, x);
    }
    const bool warmup = !warmed_up_;
    warmed_up_ = true;
    const Coord head = path_.head();
    try {
        if (warmup || cfg_.algorithm == Algorithm::Gbfs) {
            const SearchOutcome out = gbfs_search(window_, head, cfg_.path_rules);
            if (cfg_.algorithm == Algorithm::Ibfs) {
                search_.queue.assign(out.exit_nodes.begin(), out.exit_nodes.end());
            }
        } else {
            search_.root = head;
            ibfs_step(window_, search_);
        }
        const std::size_t first = path_.nodes.size();
        extend_path(window_, path_, choice_rng_, cfg_.path_rules);
        generate_pattern(window_, path_, first, program_);
    } catch (const SearchDeath &) {
        termination_ = Termination::SearchDeath;
    } catch (const NoRightNode &) {
        termination_ = Termination::NoRightNode;
    }
    if (termination_) {
        close_cycle();
        return false;
    }
    planned_ = true;
    return true;
}

void Controller::measure(const OutcomeSource &source) {
    if (!planned_ || !cycle_open_ || termination_) {
        throw std::logic_error("measure() called outside a planned cycle");
    }
    planned_ = false;
    measure_column(window_, window_.block_first(), source, path_, cfg_.path_rules);
    close_cycle();
}

void Controller::measure_default() {
    if (cfg_.outcomes == OutcomeMode::Zero) {
        measure([](const MeasurementRequest &) { return false; });
        return;
    }
    std::bernoulli_distribution coin(0.5);
    measure([&](const MeasurementRequest &) { return coin(outcome_rng_); });
}

std::int64_t Controller::depth() const {
    if (termination_ == Termination::ReachedEnd) {
        return cfg_.width;
    }
    return path_.depth;
}

void Controller::close_cycle() {
    cycles_.push_back(window_.counters());
    if (cfg_.trace) {
        append_trace();
    }
    cycle_open_ = false;
}

void Controller::append_trace() {
    std::ostringstream os;
    os << "# cycle " << cycles_.size() - 1 << " head " << to_string(path_.head())
       << " pred_writes " << window_.counters().predecessor_writes;
    if (termination_) {
        os << " end " << to_string(*termination_);
    }
    os << '\n' << window_.dump();
    trace_ += os.str();
}

TrialResult run_trial(const ExperimentConfig &cfg, std::uint64_t seed) {
    Controller ctl(cfg, seed);
    ctl.fill();
    while (ctl.plan_cycle()) {
        ctl.measure_default();
    }
    TrialResult r;
    r.seed = seed;
    r.max_depth = ctl.depth();
    r.termination = *ctl.termination();
    r.per_cycle_counters = ctl.cycle_counters();
    r.final_byproduct = ctl.path().byproduct;
    r.trace = ctl.trace();
    return r;
}

WriteStats pred_write_stats(const std::vector<TrialResult> &trials) {
    WriteStats s;
    double sum = 0.0;
    for (const TrialResult &t : trials) {
        for (std::size_t i = kWarmupCycles; i < t.per_cycle_counters.size(); ++i) {
            const double w = static_cast<double>(t.per_cycle_counters[i].predecessor_writes);
            sum += w;
            s.max = std::max(s.max, w);
            ++s.cycles;
        }
    }
    s.mean = s.cycles ? sum / static_cast<double>(s.cycles) : 0.0;
    return s;
}

namespace {

template <class F>
void parallel_for(std::size_t n, F &&body) {
    const std::size_t workers =
        std::min<std::size_t>(n, std::max(1U, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n && !failed; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    if (!failed.exchange(true)) {
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace

std::vector<TrialResult> run_trials(const ExperimentConfig &cfg) {
    cfg.validate();
    std::vector<TrialResult> out(static_cast<std::size_t>(cfg.reps));
    parallel_for(out.size(), [&](std::size_t i) {
        out[i] = run_trial(cfg, trial_seed(cfg.master_seed, i));
    });
    return out;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig &base, const SweepGrid &grid) {
    std::vector<SweepRow> rows;
    for (const Algorithm alg : grid.algorithms) {
        for (const double p : grid.ps) {
            for (const int b : grid.block_widths) {
                ExperimentConfig cfg = base;
                cfg.algorithm = alg;
                cfg.p = p;
                cfg.block_width = b;
                cfg.trace = false;
                const auto trials = run_trials(cfg);
                SweepRow row;
                row.algorithm = alg;
                row.p = p;
                row.block_width = b;
                row.height = cfg.height;
                row.width = cfg.width;
                row.reps = cfg.reps;
                double sum = 0.0;
                double sq = 0.0;
                for (const auto &t : trials) {
                    sum += static_cast<double>(t.max_depth);
                    sq += static_cast<double>(t.max_depth) * static_cast<double>(t.max_depth);
                }
                const double n = static_cast<double>(trials.size());
                row.mean_depth = sum / n;
                row.depth_stddev = std::sqrt(std::max(0.0, sq / n - row.mean_depth * row.mean_depth));
                const WriteStats ws = pred_write_stats(trials);
                row.mean_pred_writes = ws.mean;
                row.max_pred_writes = ws.max;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow> &rows) {
    std::ostringstream os;
    os.precision(10);
    os << kSweepCsvHeader << '\n';
    for (const SweepRow &r : rows) {
        os << to_string(r.algorithm) << ',' << r.p << ',' << r.block_width << ',' << r.height << ','
           << r.width << ',' << r.reps << ',' << r.mean_depth << ',' << r.mean_pred_writes << ','
           << r.max_pred_writes << '\n';
    }
    return os.str();
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

std::string trim(std::string s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

double to_double(const std::string &s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    if (used != s.size()) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    return v;
}

long long to_int(const std::string &s) {
    long long v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
    return v;
}

} // namespace

std::vector<SweepRow> sweep_from_csv(std::string_view csv) {
    std::istringstream in{std::string(csv)};
    std::string line;
    std::map<std::string, std::size_t> col;
    std::vector<SweepRow> rows;
    bool header = true;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto cells = split(line, ',');
        for (auto &c : cells) {
            c = trim(c);
        }
        if (header) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                col[cells[i]] = i;
            }
            for (const char *need : {"alg", "p", "B", "H", "reps", "mean_depth",
                                     "mean_pred_writes", "max_pred_writes"}) {
                if (!col.count(need)) {
                    throw std::invalid_argument(std::string("sweep CSV lacks column '") + need + "'");
                }
            }
            header = false;
            continue;
        }
        if (cells.size() != col.size()) {
            throw std::invalid_argument("malformed sweep CSV row: " + line);
        }
        SweepRow r;
        r.algorithm = parse_algorithm(cells[col["alg"]]);
        r.p = to_double(cells[col["p"]]);
        r.block_width = static_cast<int>(to_int(cells[col["B"]]));
        r.height = static_cast<int>(to_int(cells[col["H"]]));
        if (col.count("W")) {
            r.width = to_int(cells[col["W"]]);
        }
        r.reps = static_cast<int>(to_int(cells[col["reps"]]));
        r.mean_depth = to_double(cells[col["mean_depth"]]);
        r.mean_pred_writes = to_double(cells[col["mean_pred_writes"]]);
        r.max_pred_writes = to_double(cells[col["max_pred_writes"]]);
        rows.push_back(r);
    }
    if (header) {
        throw std::invalid_argument("empty sweep CSV");
    }
    return rows;
}

std::optional<FailureCase> find_failure_case(const ExperimentConfig &cfg, std::uint64_t max_seeds) {
    ExperimentConfig ibfs = cfg;
    ibfs.algorithm = Algorithm::Ibfs;
    ibfs.trace = true;
    ExperimentConfig gbfs = cfg;
    gbfs.algorithm = Algorithm::Gbfs;
    gbfs.trace = false;
    for (std::uint64_t i = 0; i < max_seeds; ++i) {
        const std::uint64_t seed = trial_seed(cfg.master_seed, i);
        const TrialResult ri = run_trial(ibfs, seed);
        if (ri.termination == Termination::ReachedEnd) {
            continue;
        }
        const TrialResult rg = run_trial(gbfs, seed);
        if (rg.max_depth > ri.max_depth) {
            return FailureCase{seed, i, ri.max_depth, rg.max_depth, ri.termination, ri.trace};
        }
    }
    return std::nullopt;
}

namespace {

template <class T, class Conv>
std::vector<T> parse_list(std::string_view spec, Conv conv) {
    const std::string s = trim(std::string(spec));
    if (s.empty()) {
        throw std::invalid_argument("empty value list");
    }
    std::vector<T> out;
    if (s.find(':') != std::string::npos) {
        const auto parts = split(s, ':');
        if (parts.size() != 3) {
            throw std::invalid_argument("range must be start:stop:step, got '" + s + "'");
        }
        const T start = conv(trim(parts[0]));
        const T stop = conv(trim(parts[1]));
        const T stepv = conv(trim(parts[2]));
        if (!(stepv > T{0})) {
            throw std::invalid_argument("range step must be positive");
        }
        // Index-based so float ranges do not drift past their end point.
        const double count = std::floor(static_cast<double>(stop - start) / static_cast<double>(stepv) + 1e-9);
        for (long long k = 0; k <= static_cast<long long>(count); ++k) {
            out.push_back(static_cast<T>(start + static_cast<T>(k) * stepv));
        }
        return out;
    }
    for (const auto &item : split(s, ',')) {
        out.push_back(conv(trim(item)));
    }
    return out;
}

} // namespace

std::vector<double> parse_double_list(std::string_view spec) {
    return parse_list<double>(spec, to_double);
}

std::vector<int> parse_int_list(std::string_view spec) {
    return parse_list<int>(spec, [](const std::string &s) { return static_cast<int>(to_int(s)); });
}

} // namespace mbqc
