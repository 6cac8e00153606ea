#include "mbqc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "mbqc/rng.hpp"

namespace mbqc {

double noisy_angle(double theta, const NoiseModel &noise, std::mt19937_64 &rng) {
    if (noise.sigma_v <= 0.0) {
        return theta;
    }
    std::normal_distribution<double> eps(0.0, noise.sigma_v);
    return theta + std::numbers::pi * eps(rng) / noise.v_pi;
}

void add_column(QuantumState &st, const NodeWindow &w, std::int64_t x,
                const std::optional<InputOverride> &input) {
    const ColumnEdges &e = w.edges(x);
    std::vector<std::size_t> slots(static_cast<std::size_t>(w.height()));
    for (int y = 0; y < w.height(); ++y) {
        const Coord c{x, y};
        Qubit q = Qubit::plus();
        if (input && input->row == y) {
            q = input->state;
        }
        if (e.horizontal[static_cast<std::size_t>(y)] && w.holds({x - 1, y}) && !st.slot_of({x - 1, y})) {
            const NodeRecord &left = w.peek({x - 1, y});
            if (left.measured && left.outcome) {
                apply_z(q);
            }
        }
        slots[static_cast<std::size_t>(y)] = st.add_qubit(c, q);
    }
    for (int y = 0; y + 1 < w.height(); ++y) {
        if (e.vertical[static_cast<std::size_t>(y)]) {
            st.cz(slots[static_cast<std::size_t>(y)], slots[static_cast<std::size_t>(y + 1)]);
        }
    }
    for (int y = 0; y < w.height(); ++y) {
        if (!e.horizontal[static_cast<std::size_t>(y)]) {
            continue;
        }
        if (const auto left = st.slot_of({x - 1, y})) {
            st.cz(*left, slots[static_cast<std::size_t>(y)]);
        }
    }
}

Qubit reference_evolve(Qubit ref, std::span<const double> angles, std::size_t first_index) {
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if ((first_index + i) % 2 == 0) {
            apply_rz(ref, angles[i]);
        } else {
            apply_rx(ref, angles[i]);
        }
    }
    return ref;
}

Qubit expected_head_state(const Qubit &input, std::span<const double> angles, std::size_t head_index) {
    if (angles.size() < head_index) {
        throw std::invalid_argument("not enough angles for the head index");
    }
    if (head_index % 2 == 0) {
        return reference_evolve(input, angles.first(head_index));
    }
    Qubit q = reference_evolve(input, angles.first(head_index - 1));
    apply_rz(q, angles[head_index - 1]);
    apply_h(q);
    return q;
}

Qubit undo_byproduct(Qubit out, Byproduct b, std::size_t head_index, bool carried_z) {
    if (carried_z) {
        apply_z(out);
    }
    // Odd qubits carry the pair in the swapped frame.
    const bool xp = head_index % 2 == 0 ? b.x : b.z;
    const bool zp = head_index % 2 == 0 ? b.z : b.x;
    if (xp) {
        apply_x(out);
    }
    if (zp) {
        apply_z(out);
    }
    return out;
}

namespace {

bool sim_measure(QuantumState &st, const MeasurementRequest &req, const NoiseModel &noise,
                 std::mt19937_64 &noise_rng, std::mt19937_64 &rng) {
    const auto slot = st.slot_of(req.node);
    if (!slot) {
        throw std::logic_error("qubit " + to_string(req.node) + " is not in the simulator");
    }
    const MeasurementBasis basis = req.xy_plane
                                       ? MeasurementBasis::xy(noisy_angle(req.angle, noise, noise_rng))
                                       : MeasurementBasis::z();
    return st.measure(*slot, basis, rng);
}

} // namespace

std::vector<bool> sim_round(QuantumState &st, Controller &ctl, const NoiseModel &noise,
                            std::mt19937_64 &rng) {
    const std::int64_t x = ctl.measure_column_index();
    if (!st.slot_of({x + 1, 0})) {
        add_column(st, ctl.window(), x + 1);
    }
    std::vector<bool> outcomes;
    ctl.measure([&](const MeasurementRequest &req) {
        const bool m = sim_measure(st, req, noise, rng, rng);
        if (req.node.x == x) {
            outcomes.push_back(m);
        }
        return m;
    });
    return outcomes;
}

std::optional<double> verify_column(QuantumState st, const NodeWindow &w, const PathState &path,
                                    const Qubit &input, std::span<const double> angles,
                                    const NoiseModel &noise, std::mt19937_64 &rng) {
    const Coord head = path.head();
    const std::size_t hi = path.head_index();
    for (std::size_t i = 0; i < hi; ++i) {
        if (path.nodes[i].x > head.x) {
            return std::nullopt;
        }
    }
    if (!st.slot_of(head)) {
        throw std::logic_error("path head is not in the simulator");
    }
    Byproduct b = path.byproduct;
    std::map<Coord, bool> carried;
    for (const Coord c : st.labels()) {
        carried[c] = w.peek(c).carried_z;
    }

    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < hi; ++i) {
        if (st.slot_of(path.nodes[i])) {
            pending.push_back(i);
        }
    }
    const std::vector<Coord> live = st.labels();
    for (const Coord c : live) {
        if (c == head || std::find(path.nodes.begin(), path.nodes.end(), c) != path.nodes.end()) {
            continue;
        }
        if (!st.measure(*st.slot_of(c), MeasurementBasis::z(), rng)) {
            continue;
        }
        for (Direction d : kNeighborOrder) {
            if (!w.has_edge(c, d)) {
                continue;
            }
            const Coord n = step(c, d);
            if (st.slot_of(n)) {
                carried[n] = !carried[n];
            } else if (const auto &pat = w.peek(n).pattern; pat && pat->on_path() && w.peek(n).measured) {
                b = update_byproduct(b, true, pat->r_b);
            }
        }
    }
    for (const std::size_t i : pending) {
        const Coord c = path.nodes[i];
        const NodeRecord &r = w.peek(c);
        if (!r.pattern || !r.pattern->on_path()) {
            throw PatternError("path node " + to_string(c) + " has no on-path rules");
        }
        const bool s = adaptive_setting(*r.pattern, b);
        const double a = noisy_angle(s ? -r.pattern->theta : r.pattern->theta, noise, rng);
        bool m = st.measure(*st.slot_of(c), MeasurementBasis::xy(a), rng);
        m = m != carried[c];
        b = update_byproduct(b, m, r.pattern->r_b);
    }
    const Qubit out = undo_byproduct(st.single_qubit(), b, hi, carried[head]);
    return fidelity(expected_head_state(input, angles, hi), out);
}

PathSimResult simulate_path(const ExperimentConfig &cfg, std::uint64_t seed, AngleMode angles,
                            const NoiseModel &noise) {
    GateProgram program = angles == AngleMode::Random
                              ? GateProgram::random(stream_seed(seed, Stream::Angles))
                              : GateProgram::identity();
    ExperimentConfig induced = cfg;
    induced.path_rules = PathRules::Induced;
    Controller ctl(induced, seed, program);
    auto sim_rng = make_stream(seed, Stream::Outcomes);
    auto noise_rng = make_stream(seed, Stream::Noise);
    auto input_rng = make_stream(seed, Stream::Input);
    auto verify_rng = make_stream(seed, Stream::Verify);
    const Qubit input = Qubit::random(input_rng);

    PathSimResult res;
    res.seed = seed;
    ctl.fill();
    QuantumState st(static_cast<std::size_t>(2 * cfg.height));
    add_column(st, ctl.window(), 0, InputOverride{cfg.height / 2, input});
    while (ctl.plan_cycle()) {
        const std::int64_t x = ctl.measure_column_index();
        const std::int64_t next = x + 1;
        if (!st.slot_of({next, 0})) {
            add_column(st, ctl.window(), next);
        }
        ctl.measure([&](const MeasurementRequest &req) {
            return sim_measure(st, req, noise, noise_rng, sim_rng);
        });
        res.max_norm_drift = std::max(res.max_norm_drift, std::abs(st.norm() - 1.0));
        const PathState &path = ctl.path();
        const auto phis = ctl.program().angles(path.head_index());
        const auto f = verify_column(st, ctl.window(), path, input, phis, noise, verify_rng);
        if (f) {
            res.fidelities.push_back({x, *f});
        } else {
            ++res.unverified_columns;
        }
    }
    res.termination = *ctl.termination();
    return res;
}

std::vector<FidelityPoint> run_esim(const EsimConfig &cfg) {
    cfg.base.validate();
    if (cfg.base.height > 12) {
        throw ConfigError("statevector verification supports H <= 12");
    }
    if (cfg.reps < 1 || cfg.sigmas.empty()) {
        throw ConfigError("esim needs reps >= 1 and at least one sigma");
    }
    std::vector<FidelityPoint> out;
    for (const double sigma : cfg.sigmas) {
        if (sigma < 0.0) {
            throw ConfigError("sigma must be non-negative");
        }
        const NoiseModel noise{sigma, cfg.v_pi};
        std::vector<PathSimResult> runs(static_cast<std::size_t>(cfg.reps));
        for (std::size_t i = 0; i < runs.size(); ++i) {
            runs[i] = simulate_path(cfg.base, trial_seed(cfg.base.master_seed, i), cfg.angles, noise);
        }
        struct Acc {
            double sum{0.0};
            double sq{0.0};
            std::size_t n{0};
        };
        std::map<std::int64_t, Acc> by_col;
        for (const auto &r : runs) {
            for (const auto &cf : r.fidelities) {
                Acc &a = by_col[cf.column];
                a.sum += cf.fidelity;
                a.sq += cf.fidelity * cf.fidelity;
                ++a.n;
            }
        }
        for (const auto &[col, a] : by_col) {
            FidelityPoint pt;
            pt.sigma = sigma;
            pt.column = col;
            pt.elapsed_ns = static_cast<double>(col + 1) * cfg.base.clock_period.nanoseconds();
            pt.survivors = a.n;
            pt.mean_fidelity = a.sum / static_cast<double>(a.n);
            pt.stddev = std::sqrt(std::max(0.0, a.sq / static_cast<double>(a.n) -
                                                    pt.mean_fidelity * pt.mean_fidelity));
            out.push_back(pt);
        }
    }
    return out;
}

std::string esim_to_csv(const std::vector<FidelityPoint> &points) {
    std::ostringstream os;
    os.precision(12);
    os << kEsimCsvHeader << '\n';
    for (const auto &p : points) {
        os << p.sigma << ',' << p.elapsed_ns << ',' << p.mean_fidelity << '\n';
    }
    return os.str();
}

std::string esim_survival_to_csv(const std::vector<FidelityPoint> &points) {
    std::ostringstream os;
    os.precision(12);
    os << kEsimSurvivalCsvHeader << '\n';
    for (const auto &p : points) {
        os << p.sigma << ',' << p.elapsed_ns << ',' << p.survivors << ',' << p.stddev << '\n';
    }
    return os.str();
}

} // namespace mbqc
