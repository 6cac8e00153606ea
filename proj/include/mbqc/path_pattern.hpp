#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "mbqc/node_window.hpp"
#include "mbqc/search.hpp"

namespace mbqc {

/// Running byproduct operator X^x Z^z.
struct Byproduct {
    bool x{false};
    bool z{false};

    bool operator==(const Byproduct &) const = default;
};

/// The logical qubit's path a_0 ... a_N through the cluster. nodes.back() is
/// the current head (most recent right node).
struct PathState {
    std::vector<Coord> nodes;
    Byproduct byproduct{};
    std::int64_t depth{0}; ///< largest column index of any on-path node

    Coord head() const;
    std::size_t head_index() const { return nodes.size() - 1; }
};

/// Sequence of logical rotation angles phi_0, phi_1, ... consumed one per
/// on-path qubit: even indices are R_z, odd indices R_x.
class GateProgram {
public:
    static GateProgram identity();
    /// Angles drawn uniformly from [0, 2pi), generated on demand from `seed`.
    static GateProgram random(std::uint64_t seed);
    static GateProgram fixed(std::vector<double> angles);

    bool is_identity() const { return kind_ == Kind::Identity; }
    double angle(std::size_t n);
    std::vector<double> angles(std::size_t count);

private:
    enum class Kind { Identity, Random, Fixed };
    Kind kind_{Kind::Identity};
    std::mt19937_64 rng_{};
    std::vector<double> angles_;
};

class NoRightNode : public std::runtime_error {
public:
    NoRightNode() : std::runtime_error("no successor chain reaches a right node") {}
};

class PatternError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Pattern rules of on-path qubit a_n.
PatternRules on_path_rules(std::size_t n, GateProgram &program);

/// Places a_0 (the input qubit) and writes its rules.
void start_path(NodeWindow &w, PathState &path, Coord root, GateProgram &program);

/// Walks successor links from the head to a right node in column
/// block_first+1, picking uniformly at branch points and backtracking out of
/// dead ends. Successors that break `rules` are skipped. Appends the walked
/// nodes to the path and returns them. Throws NoRightNode if no chain reaches one.
std::vector<Coord> extend_path(NodeWindow &w, PathState &path, std::mt19937_64 &rng,
                               PathRules rules = PathRules::Loose);

/// Writes rules for path nodes a_first ... a_N and cuts out their neighbours.
/// Cut-out processing of a node waits until its successor is known: the
/// previous head (a_{first-1}) is processed now, the new head only towards its
/// left neighbour (which is measured this cycle).
void generate_pattern(NodeWindow &w, const PathState &path, std::size_t first,
                      GateProgram &program);

/// Cuts out nodes of the freshly pushed column `x` that sit to the right of an
/// already-processed on-path node.
void cut_out_new_column(NodeWindow &w, const PathState &path, std::int64_t x);

/// s = r*x XOR s*z. Throws PatternError for Z-basis rules.
bool adaptive_setting(const PatternRules &rules, Byproduct b);

/// (x, z) <- (x XOR m*r, z XOR m*s).
Byproduct update_byproduct(Byproduct b, bool m, BitPair r_b);

struct ModulatorAngles {
    double alpha{0.0};
    double beta{0.0};
};

/// xy-plane: (pi/2 - (-1)^s theta, pi/2). Z basis: (0, 0).
ModulatorAngles basis_to_modulator(const PatternRules &rules, bool s);

/// One single-qubit measurement requested by the controller.
struct MeasurementRequest {
    Coord node{};
    bool xy_plane{false};
    double angle{0.0}; ///< (-1)^s theta for xy-plane measurements
};

using OutcomeSource = std::function<bool(const MeasurementRequest &)>;

/// Measures column `col`: Z qubits top to bottom, then path qubits in path
/// order. A Z outcome flips the outcome of each neighbour still to be measured
/// (carried bit) and is folded into the byproduct for neighbouring path qubits
/// already measured. Under induced rules, Z-ruled qubits right of a path qubit
/// in `col` are measured in the same round, ahead of the path qubits.
void measure_column(NodeWindow &w, std::int64_t col, const OutcomeSource &outcomes,
                    PathState &path, PathRules rules = PathRules::Loose);

} // namespace mbqc
