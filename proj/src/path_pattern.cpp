#include "mbqc/path_pattern.hpp"

#include <algorithm>
#include <numbers>

namespace mbqc {

Coord PathState::head() const {
    if (nodes.empty()) {
        throw std::logic_error("path has no head yet");
    }
    return nodes.back();
}

GateProgram GateProgram::identity() {
    return {};
}

GateProgram GateProgram::random(std::uint64_t seed) {
    GateProgram g;
    g.kind_ = Kind::Random;
    g.rng_.seed(seed);
    return g;
}

GateProgram GateProgram::fixed(std::vector<double> angles) {
    GateProgram g;
    g.kind_ = Kind::Fixed;
    g.angles_ = std::move(angles);
    return g;
}

double GateProgram::angle(std::size_t n) {
    switch (kind_) {
    case Kind::Identity: return 0.0;
    case Kind::Fixed: return n < angles_.size() ? angles_[n] : 0.0;
    case Kind::Random: {
        std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
        while (angles_.size() <= n) {
            angles_.push_back(u(rng_));
        }
        return angles_[n];
    }
    }
    return 0.0;
}

std::vector<double> GateProgram::angles(std::size_t count) {
    std::vector<double> out(count);
    for (std::size_t n = 0; n < count; ++n) {
        out[n] = angle(n);
    }
    return out;
}

namespace {

BitPair on_path_r_b(std::size_t n) {
    return {n % 2 == 1, n % 2 == 0};
}

bool on_path_node(const NodeWindow &w, Coord c) {
    const auto &pat = w.peek(c).pattern;
    return pat && pat->on_path();
}

// Cut out `n` as a neighbour of path qubit a_index.
void cut_out(NodeWindow &w, Coord n, std::size_t index) {
    if (!w.in_block(n) || on_path_node(w, n) || w.peek(n).measured) {
        return;
    }
    PatternRules rules = w.peek(n).pattern.value_or(PatternRules{true, 0.0, {}, {}});
    rules.z_flag = true;
    rules.r_b = rules.r_b ^ on_path_r_b(index);
    w.set_pattern(n, rules);
}

void process_neighbours(NodeWindow &w, Coord c, std::size_t index, bool skip_left,
                        bool only_left) {
    for (Direction d : kNeighborOrder) {
        if ((skip_left && d == Direction::Left) || (only_left && d != Direction::Left)) {
            continue;
        }
        if (w.has_edge(c, d)) {
            cut_out(w, step(c, d), index);
        }
    }
}

} // namespace

PatternRules on_path_rules(std::size_t n, GateProgram &program) {
    PatternRules r;
    r.z_flag = false;
    r.r_b = on_path_r_b(n);
    if (!program.is_identity()) {
        r.theta = -program.angle(n);
        r.r_s = n % 2 == 0 ? BitPair{true, false} : BitPair{false, true};
    }
    return r;
}

void start_path(NodeWindow &w, PathState &path, Coord root, GateProgram &program) {
    path.nodes.assign(1, root);
    path.byproduct = {};
    path.depth = root.x;
    w.set_pattern(root, on_path_rules(0, program));
}

std::vector<Coord> extend_path(NodeWindow &w, PathState &path, std::mt19937_64 &rng,
                               PathRules rules) {
    const std::int64_t right_col = w.block_first() + 1;
    std::vector<Coord> ext;

    auto on_extension = [&](Coord c) { return std::find(ext.begin(), ext.end(), c) != ext.end(); };
    // Induced rules keep the path a chordless chain that never steps left.
    auto valid = [&](Coord from, Coord c) {
        if (!w.in_block(c) || on_extension(c) || !is_available(w, c, rules)) {
            return false;
        }
        if (rules == PathRules::Loose) {
            return true;
        }
        if (c.x < from.x) {
            return false;
        }
        for (Direction d : kNeighborOrder) {
            const Coord n = step(c, d);
            if (n == from || !w.has_edge(c, d)) {
                continue;
            }
            if (on_path_node(w, n) || on_extension(n)) {
                return false;
            }
        }
        return true;
    };

    struct Frame {
        Coord node;
        std::vector<Coord> options;
    };
    std::vector<Frame> stack;
    auto options_of = [&](Coord c) {
        std::vector<Coord> opts;
        for (const Coord s : w.successors_of(c)) {
            if (valid(c, s)) {
                opts.push_back(s);
            }
        }
        return opts;
    };

    stack.push_back({path.head(), options_of(path.head())});
    while (!stack.empty()) {
        Frame &top = stack.back();
        if (top.options.empty()) {
            stack.pop_back();
            if (!ext.empty()) {
                ext.pop_back();
            }
            continue;
        }
        std::size_t pick = 0;
        if (top.options.size() > 1) {
            std::uniform_int_distribution<std::size_t> u(0, top.options.size() - 1);
            pick = u(rng);
        }
        const Coord next = top.options[pick];
        top.options.erase(top.options.begin() + static_cast<std::ptrdiff_t>(pick));
        ext.push_back(next);
        const NodeRecord &r = w.read(next);
        if (r.right_node && next.x == right_col) {
            for (const Coord c : ext) {
                path.nodes.push_back(c);
                path.depth = std::max(path.depth, c.x);
            }
            return ext;
        }
        stack.push_back({next, options_of(next)});
    }
    throw NoRightNode();
}

void generate_pattern(NodeWindow &w, const PathState &path, std::size_t first,
                      GateProgram &program) {
    if (first == 0 || first > path.nodes.size()) {
        throw std::invalid_argument("generate_pattern needs 1 <= first <= path length");
    }
    const std::size_t last = path.head_index();
    for (std::size_t n = first; n <= last; ++n) {
        w.set_pattern(path.nodes[n], on_path_rules(n, program));
    }
    process_neighbours(w, path.nodes[first - 1], first - 1, true, false);
    for (std::size_t n = first; n < last; ++n) {
        process_neighbours(w, path.nodes[n], n, false, false);
    }
    if (first <= last) {
        process_neighbours(w, path.nodes[last], last, false, true);
    }
}

void cut_out_new_column(NodeWindow &w, const PathState &path, std::int64_t x) {
    const Coord head = path.head();
    for (int y = 0; y < w.height(); ++y) {
        const Coord c{x, y};
        const Coord left{x - 1, y};
        if (left == head || !w.has_edge(c, Direction::Left) || !on_path_node(w, left)) {
            continue;
        }
        const auto it = std::find(path.nodes.begin(), path.nodes.end(), left);
        if (it == path.nodes.end()) {
            continue;
        }
        cut_out(w, c, static_cast<std::size_t>(it - path.nodes.begin()));
    }
}

bool adaptive_setting(const PatternRules &rules, Byproduct b) {
    if (rules.z_flag) {
        throw PatternError("adaptive setting requested for a Z-basis qubit");
    }
    return (rules.r_s.r && b.x) != (rules.r_s.s && b.z);
}

Byproduct update_byproduct(Byproduct b, bool m, BitPair r_b) {
    return {b.x != (m && r_b.r), b.z != (m && r_b.s)};
}

ModulatorAngles basis_to_modulator(const PatternRules &rules, bool s) {
    if (rules.z_flag) {
        return {0.0, 0.0};
    }
    const double signed_theta = s ? -rules.theta : rules.theta;
    return {std::numbers::pi / 2 - signed_theta, std::numbers::pi / 2};
}

namespace {

// A Z outcome m acts as Z^m on every neighbour. On a qubit still to be
// measured that is an outcome flip, kept as its carried bit; on a path qubit
// already measured it is folded into the byproduct with that qubit's R_b.
void route_z(NodeWindow &w, Coord c, bool m, PathState &path) {
    if (!m) {
        return;
    }
    for (Direction d : kNeighborOrder) {
        if (!w.has_edge(c, d)) {
            continue;
        }
        const Coord n = step(c, d);
        const NodeRecord &r = w.peek(n);
        if (!r.measured) {
            w.set_carried_z(n, !r.carried_z);
        } else if (r.pattern && r.pattern->on_path()) {
            path.byproduct = update_byproduct(path.byproduct, true, r.pattern->r_b);
        }
    }
}

void measure_z(NodeWindow &w, Coord c, const OutcomeSource &outcomes, PathState &path) {
    const bool m = outcomes({c, false, 0.0});
    w.set_measured(c, m);
    route_z(w, c, m, path);
}

} // namespace

void measure_column(NodeWindow &w, std::int64_t col, const OutcomeSource &outcomes,
                    PathState &path, PathRules rules) {
    std::vector<std::size_t> on_path;
    for (std::size_t i = 0; i < path.nodes.size(); ++i) {
        if (path.nodes[i].x == col) {
            on_path.push_back(i);
        }
    }
    for (const std::size_t i : on_path) {
        if (!on_path_node(w, path.nodes[i])) {
            throw PatternError("path node " + to_string(path.nodes[i]) + " has no pattern rules");
        }
    }

    // Z qubits first so every adaptive setting sees their outcomes.
    for (int y = 0; y < w.height(); ++y) {
        const Coord c{col, y};
        if (!w.peek(c).measured && !on_path_node(w, c)) {
            measure_z(w, c, outcomes, path);
        }
    }
    // Cut-outs to the right of a path qubit that has a successor in this
    // column would otherwise be read one round too late.
    if (rules == PathRules::Induced) {
        for (const std::size_t i : on_path) {
            const Coord c = path.nodes[i];
            if (!w.has_edge(c, Direction::Right)) {
                continue;
            }
            const Coord right = step(c, Direction::Right);
            const NodeRecord &r = w.peek(right);
            if (!r.measured && r.pattern && r.pattern->z_flag) {
                measure_z(w, right, outcomes, path);
            }
        }
    }
    for (const std::size_t i : on_path) {
        const Coord c = path.nodes[i];
        const NodeRecord &r = w.peek(c);
        const PatternRules pr = *r.pattern;
        const bool s = adaptive_setting(pr, path.byproduct);
        bool m = outcomes({c, true, s ? -pr.theta : pr.theta});
        m = m != r.carried_z;
        w.set_measured(c, m);
        path.byproduct = update_byproduct(path.byproduct, m, pr.r_b);
    }
}

} // namespace mbqc
