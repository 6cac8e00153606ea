#include "mbqc/timing.hpp"

#include <sstream>
#include <stdexcept>

#include "mbqc/experiment.hpp"

namespace mbqc {

Duration Duration::from_seconds(double s) {
    return Duration{s * 1e12};
}

double Duration::seconds() const {
    return ps_ / 1e12;
}

Duration write_time_bound(Duration clock_period, double pred_writes) {
    if (!(pred_writes > 0.0) || !(clock_period.picoseconds() > 0.0)) {
        throw std::invalid_argument("write time bound needs T_p > 0 and W_pred > 0");
    }
    return Duration::from_ps(clock_period.picoseconds() / pred_writes);
}

Duration gbfs_asymptotic_bound(Duration clock_period, int block_width, int height) {
    if (block_width < 1 || height < 1) {
        throw std::invalid_argument("B and H must be positive");
    }
    return write_time_bound(clock_period, 2.0 * block_width * height);
}

Duration clock_floor(Duration write_time, double pred_writes) {
    if (pred_writes < 0.0 || write_time.picoseconds() < 0.0) {
        throw std::invalid_argument("clock floor needs non-negative inputs");
    }
    return Duration::from_ps(write_time.picoseconds() * pred_writes);
}

std::vector<TimingReport> timing_from_sweep_csv(std::string_view csv, Duration clock_period) {
    std::vector<TimingReport> out;
    for (const SweepRow &row : sweep_from_csv(csv)) {
        TimingReport r;
        r.algorithm = to_string(row.algorithm);
        r.p = row.p;
        r.block_width = row.block_width;
        r.height = row.height;
        r.clock_period = clock_period;
        r.pred_writes_mean = row.mean_pred_writes;
        r.pred_writes_max = row.max_pred_writes;
        r.write_time = write_time_bound(clock_period, row.mean_pred_writes);
        out.push_back(r);
    }
    return out;
}

std::string timing_to_csv(const std::vector<TimingReport> &rows) {
    std::ostringstream os;
    os.precision(10);
    os << kTimingCsvHeader << '\n';
    for (const TimingReport &r : rows) {
        os << r.algorithm << ',' << r.p << ',' << r.block_width << ',' << r.height << ','
           << r.clock_period.seconds() << ',' << r.pred_writes_mean << ',' << r.pred_writes_max
           << ',' << r.write_time.seconds() << '\n';
    }
    return os.str();
}

} // namespace mbqc
