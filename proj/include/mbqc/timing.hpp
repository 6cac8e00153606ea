#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mbqc {

/// A time span held in picoseconds, so that the round numbers used in latency
/// budgets (1 ns / 200 = 5 ps) stay exact in floating point.
class Duration {
public:
    constexpr Duration() = default;

    static constexpr Duration from_ps(double ps) { return Duration{ps}; }
    static constexpr Duration from_ns(double ns) { return Duration{ns * 1e3}; }
    static Duration from_seconds(double s);

    constexpr double picoseconds() const { return ps_; }
    constexpr double nanoseconds() const { return ps_ / 1e3; }
    double seconds() const;

    constexpr auto operator<=>(const Duration &) const = default;

private:
    constexpr explicit Duration(double ps) : ps_(ps) {}
    double ps_{0.0};
};

/// t_write = T_p / W_pred. Throws std::invalid_argument unless W_pred > 0 and T_p > 0.
Duration write_time_bound(Duration clock_period, double pred_writes);

/// High-p GBFS limit T_p / (2 B H).
Duration gbfs_asymptotic_bound(Duration clock_period, int block_width, int height);

/// Smallest clock period for which W_pred writes of t_write each fit in a cycle.
Duration clock_floor(Duration write_time, double pred_writes);

struct TimingReport {
    std::string algorithm;
    double p{0.0};
    int block_width{0};
    int height{0};
    Duration clock_period{};
    double pred_writes_mean{0.0};
    double pred_writes_max{0.0}; ///< worst cycle; governs hard deadlines
    Duration write_time{};
};

inline constexpr std::string_view kTimingCsvHeader =
    "algorithm,p,B,H,T_p,W_pred_mean,W_pred_max,t_write";

/// Builds one report per row of a sweep CSV (see experiment.hpp for its header).
std::vector<TimingReport> timing_from_sweep_csv(std::string_view csv, Duration clock_period);

/// Times are written in seconds.
std::string timing_to_csv(const std::vector<TimingReport> &rows);

} // namespace mbqc
