#include "mbqc/mbqc.h"

#include <sstream>
#include <string>

#include "mbqc/experiment.hpp"
#include "mbqc/rng.hpp"
#include "mbqc/timing.hpp"
#include "mbqc/verify.hpp"

struct mbqc_config {
    mbqc::ExperimentConfig cfg;
};

struct mbqc_trial {
    mbqc::TrialResult result;
};

struct mbqc_buffer {
    std::string text;
};

namespace {

thread_local std::string g_last_error;

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

mbqc_status fail(mbqc_status st, const std::string &msg) {
    g_last_error = msg;
    return st;
}

template <class F>
mbqc_status guard(F &&body) {
    try {
        g_last_error.clear();
        return body();
    } catch (const mbqc::ConfigError &e) {
        return fail(MBQC_ERR_CONFIG, e.what());
    } catch (const ParseError &e) {
        return fail(MBQC_ERR_PARSE, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(MBQC_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception &e) {
        return fail(MBQC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(MBQC_ERR_INTERNAL, "unknown error");
    }
}

template <class T>
T parse_or_throw(T (*fn)(std::string_view), const char *text, const char *what) {
    if (text == nullptr) {
        throw ParseError(std::string(what) + " list is null");
    }
    try {
        return fn(text);
    } catch (const std::invalid_argument &e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

mbqc_status emit(mbqc_buffer **out, std::string text) {
    *out = new mbqc_buffer{std::move(text)};
    return MBQC_OK;
}

#define MBQC_REQUIRE(cond)                                                                      \
    do {                                                                                       \
        if (!(cond)) {                                                                         \
            return fail(MBQC_ERR_INVALID_ARGUMENT, "null argument: " #cond);                   \
        }                                                                                      \
    } while (0)

} // namespace

extern "C" {

const char *mbqc_version(void) {
    return "1.0.0";
}

const char *mbqc_last_error(void) {
    return g_last_error.c_str();
}

const char *mbqc_status_string(mbqc_status status) {
    switch (status) {
    case MBQC_OK: return "ok";
    case MBQC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MBQC_ERR_CONFIG: return "invalid configuration";
    case MBQC_ERR_PARSE: return "parse error";
    case MBQC_ERR_NOT_FOUND: return "not found";
    case MBQC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char *mbqc_buffer_data(const mbqc_buffer *buf) {
    return buf ? buf->text.c_str() : "";
}

size_t mbqc_buffer_size(const mbqc_buffer *buf) {
    return buf ? buf->text.size() : 0;
}

void mbqc_buffer_destroy(mbqc_buffer *buf) {
    delete buf;
}

mbqc_status mbqc_config_create(mbqc_config **out) {
    MBQC_REQUIRE(out);
    return guard([&] {
        *out = new mbqc_config{};
        return MBQC_OK;
    });
}

void mbqc_config_destroy(mbqc_config *cfg) {
    delete cfg;
}

mbqc_status mbqc_config_set_algorithm(mbqc_config *cfg, const char *name) {
    MBQC_REQUIRE(cfg && name);
    return guard([&] {
        cfg->cfg.algorithm = mbqc::parse_algorithm(name);
        return MBQC_OK;
    });
}

mbqc_status mbqc_config_set_path_rules(mbqc_config *cfg, const char *name) {
    MBQC_REQUIRE(cfg && name);
    return guard([&] {
        cfg->cfg.path_rules = mbqc::parse_path_rules(name);
        return MBQC_OK;
    });
}

// Plain setters; range checks happen in mbqc_config_validate and before any run.
mbqc_status mbqc_config_set_height(mbqc_config *cfg, int height) {
    MBQC_REQUIRE(cfg);
    cfg->cfg.height = height;
    return MBQC_OK;
}

mbqc_status mbqc_config_set_block_width(mbqc_config *cfg, int block_width) {
    MBQC_REQUIRE(cfg);
    cfg->cfg.block_width = block_width;
    return MBQC_OK;
}

mbqc_status mbqc_config_set_width(mbqc_config *cfg, int64_t width) {
    MBQC_REQUIRE(cfg);
    cfg->cfg.width = width;
    return MBQC_OK;
}

mbqc_status mbqc_config_set_p(mbqc_config *cfg, double p) {
    MBQC_REQUIRE(cfg);
    cfg->cfg.p = p;
    return MBQC_OK;
}

mbqc_status mbqc_config_set_reps(mbqc_config *cfg, int reps) {
    MBQC_REQUIRE(cfg);
    cfg->cfg.reps = reps;
    return MBQC_OK;
}

mbqc_status mbqc_config_set_seed(mbqc_config *cfg, uint64_t master_seed) {
    MBQC_REQUIRE(cfg);
    cfg->cfg.master_seed = master_seed;
    return MBQC_OK;
}

mbqc_status mbqc_config_set_clock_period_ns(mbqc_config *cfg, double ns) {
    MBQC_REQUIRE(cfg);
    cfg->cfg.clock_period = mbqc::Duration::from_ns(ns);
    return MBQC_OK;
}

mbqc_status mbqc_config_set_zero_outcomes(mbqc_config *cfg, int enabled) {
    MBQC_REQUIRE(cfg);
    cfg->cfg.outcomes = enabled ? mbqc::OutcomeMode::Zero : mbqc::OutcomeMode::Random;
    return MBQC_OK;
}

mbqc_status mbqc_config_set_trace(mbqc_config *cfg, int enabled) {
    MBQC_REQUIRE(cfg);
    cfg->cfg.trace = enabled != 0;
    return MBQC_OK;
}

mbqc_status mbqc_config_validate(const mbqc_config *cfg) {
    MBQC_REQUIRE(cfg);
    return guard([&] {
        cfg->cfg.validate();
        return MBQC_OK;
    });
}

uint64_t mbqc_trial_seed(uint64_t master, uint64_t index) {
    return mbqc::trial_seed(master, index);
}

mbqc_status mbqc_run_trial(const mbqc_config *cfg, uint64_t seed, mbqc_trial **out) {
    MBQC_REQUIRE(cfg && out);
    return guard([&] {
        *out = new mbqc_trial{mbqc::run_trial(cfg->cfg, seed)};
        return MBQC_OK;
    });
}

void mbqc_trial_destroy(mbqc_trial *trial) {
    delete trial;
}

int64_t mbqc_trial_depth(const mbqc_trial *trial) {
    return trial ? trial->result.max_depth : -1;
}

const char *mbqc_trial_termination(const mbqc_trial *trial) {
    return trial ? mbqc::to_string(trial->result.termination) : "";
}

size_t mbqc_trial_cycles(const mbqc_trial *trial) {
    return trial ? trial->result.per_cycle_counters.size() : 0;
}

uint64_t mbqc_trial_pred_writes(const mbqc_trial *trial, size_t cycle) {
    if (!trial || cycle >= trial->result.per_cycle_counters.size()) {
        return 0;
    }
    return trial->result.per_cycle_counters[cycle].predecessor_writes;
}

const char *mbqc_trial_trace(const mbqc_trial *trial) {
    return trial ? trial->result.trace.c_str() : "";
}

mbqc_status mbqc_run_trials_csv(const mbqc_config *cfg, mbqc_buffer **csv) {
    MBQC_REQUIRE(cfg && csv);
    return guard([&] {
        const auto &c = cfg->cfg;
        const auto trials = mbqc::run_trials(c);
        std::ostringstream os;
        os.precision(10);
        os << "trial,seed,alg,p,B,H,W,depth,termination,cycles,mean_pred_writes,max_pred_writes\n";
        for (std::size_t i = 0; i < trials.size(); ++i) {
            const auto ws = mbqc::pred_write_stats({trials[i]});
            os << i << ',' << trials[i].seed << ',' << mbqc::to_string(c.algorithm) << ',' << c.p
               << ',' << c.block_width << ',' << c.height << ',' << c.width << ','
               << trials[i].max_depth << ',' << mbqc::to_string(trials[i].termination) << ','
               << trials[i].per_cycle_counters.size() << ',' << ws.mean << ',' << ws.max << '\n';
        }
        return emit(csv, os.str());
    });
}

mbqc_status mbqc_sweep(const mbqc_config *cfg, const char *algorithms, const char *ps,
                       const char *block_widths, mbqc_buffer **csv) {
    MBQC_REQUIRE(cfg && algorithms && ps && block_widths && csv);
    return guard([&] {
        mbqc::SweepGrid grid;
        grid.algorithms.clear();
        std::string list(algorithms);
        std::size_t start = 0;
        while (start <= list.size()) {
            const std::size_t end = std::min(list.find(',', start), list.size());
            try {
                grid.algorithms.push_back(mbqc::parse_algorithm(list.substr(start, end - start)));
            } catch (const std::invalid_argument &e) {
                throw ParseError(e.what());
            }
            start = end + 1;
        }
        grid.ps = parse_or_throw(&mbqc::parse_double_list, ps, "p");
        grid.block_widths = parse_or_throw(&mbqc::parse_int_list, block_widths, "B");
        for (const double p : grid.ps) {
            auto c = cfg->cfg;
            c.p = p;
            for (const int b : grid.block_widths) {
                c.block_width = b;
                c.validate();
            }
        }
        return emit(csv, mbqc::sweep_to_csv(mbqc::run_sweep(cfg->cfg, grid)));
    });
}

mbqc_status mbqc_find_failure(const mbqc_config *cfg, uint64_t max_seeds, mbqc_buffer **report) {
    MBQC_REQUIRE(cfg && report);
    return guard([&] {
        cfg->cfg.validate();
        const auto found = mbqc::find_failure_case(cfg->cfg, max_seeds);
        if (!found) {
            return fail(MBQC_ERR_NOT_FOUND, "no IBFS failure case among " +
                                                std::to_string(max_seeds) + " seeds");
        }
        std::ostringstream os;
        os << "seed_index=" << found->seed_index << " seed=" << found->seed
           << " ibfs_depth=" << found->ibfs_depth << " gbfs_depth=" << found->gbfs_depth
           << " ibfs_end=" << mbqc::to_string(found->ibfs_termination) << '\n'
           << found->trace;
        return emit(report, os.str());
    });
}

mbqc_status mbqc_write_time_bound_ps(double clock_period_ps, double pred_writes, double *out) {
    MBQC_REQUIRE(out);
    return guard([&] {
        *out = mbqc::write_time_bound(mbqc::Duration::from_ps(clock_period_ps), pred_writes)
                   .picoseconds();
        return MBQC_OK;
    });
}

mbqc_status mbqc_gbfs_asymptotic_bound_ps(double clock_period_ps, int block_width, int height,
                                          double *out) {
    MBQC_REQUIRE(out);
    return guard([&] {
        *out = mbqc::gbfs_asymptotic_bound(mbqc::Duration::from_ps(clock_period_ps), block_width,
                                           height)
                   .picoseconds();
        return MBQC_OK;
    });
}

mbqc_status mbqc_clock_floor_ps(double write_time_ps, double pred_writes, double *out) {
    MBQC_REQUIRE(out);
    return guard([&] {
        *out = mbqc::clock_floor(mbqc::Duration::from_ps(write_time_ps), pred_writes).picoseconds();
        return MBQC_OK;
    });
}

mbqc_status mbqc_timing_from_sweep_csv(const char *sweep_csv, double clock_period_ns,
                                       mbqc_buffer **csv) {
    MBQC_REQUIRE(sweep_csv && csv);
    return guard([&] {
        std::vector<mbqc::TimingReport> rows;
        try {
            rows = mbqc::timing_from_sweep_csv(sweep_csv, mbqc::Duration::from_ns(clock_period_ns));
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what());
        }
        return emit(csv, mbqc::timing_to_csv(rows));
    });
}

mbqc_status mbqc_esim(const mbqc_config *cfg, const char *sigmas, const char *angles, double v_pi,
                      mbqc_buffer **csv, mbqc_buffer **survival) {
    MBQC_REQUIRE(cfg && sigmas && angles && csv);
    return guard([&] {
        mbqc::EsimConfig e;
        e.base = cfg->cfg;
        e.reps = cfg->cfg.reps;
        e.v_pi = v_pi;
        e.sigmas = parse_or_throw(&mbqc::parse_double_list, sigmas, "sigma");
        const std::string a(angles);
        if (a == "identity") {
            e.angles = mbqc::AngleMode::Identity;
        } else if (a == "random") {
            e.angles = mbqc::AngleMode::Random;
        } else {
            throw std::invalid_argument("angles must be identity or random");
        }
        if (!(v_pi > 0.0)) {
            throw mbqc::ConfigError("V_pi must be positive");
        }
        const auto points = mbqc::run_esim(e);
        if (survival) {
            *survival = new mbqc_buffer{mbqc::esim_survival_to_csv(points)};
        }
        return emit(csv, mbqc::esim_to_csv(points));
    });
}

} // extern "C"
