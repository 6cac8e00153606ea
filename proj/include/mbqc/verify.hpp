#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mbqc/experiment.hpp"
#include "mbqc/quantum_state.hpp"

namespace mbqc {

struct NoiseModel {
    double sigma_v{0.0}; ///< std-dev of the modulator voltage noise (V)
    double v_pi{1.0};    ///< half-wave voltage (V)
};

/// theta + pi * eps / V_pi with eps ~ N(0, sigma_v^2).
double noisy_angle(double theta, const NoiseModel &noise, std::mt19937_64 &rng);

struct InputOverride {
    int row{0};
    Qubit state{};
};

/// Appends column x of the window (|+> qubits, or `input` at its row) and
/// applies CZ for its vertical edges and its horizontal edges to column x-1.
/// A left neighbour that was already measured in Z acts as Z^m on the new qubit.
void add_column(QuantumState &st, const NodeWindow &w, std::int64_t x,
                const std::optional<InputOverride> &input = std::nullopt);

/// Logical reference: the rotations a_0 ... a_{n-1} apply to the input.
/// Index k contributes R_z(phi_k) for even k and R_x(phi_k) for odd k.
Qubit reference_evolve(Qubit ref, std::span<const double> angles, std::size_t first_index = 0);

/// Output expected on head a_n once byproducts are undone: U|in> for even n,
/// H R_z(phi_{n-1}) U_{n-1}|in> for odd n (the frame is swapped on odd qubits).
Qubit expected_head_state(const Qubit &input, std::span<const double> angles, std::size_t head_index);

/// Removes X^x Z^z (even head) or X^z Z^x (odd head) and the carried Z.
Qubit undo_byproduct(Qubit out, Byproduct b, std::size_t head_index, bool carried_z);

/// Measures column `col` of the simulator according to the controller's
/// pattern rules (through Controller::measure); returns the outcomes top to bottom.
std::vector<bool> sim_round(QuantumState &st, Controller &ctl, const NoiseModel &noise,
                            std::mt19937_64 &rng);

/// Measures a copy of the register down to the path head using the pattern
/// rules (head neighbours treated as cut-outs), undoes the byproduct, and
/// returns |<expected|out>|^2. Returns nullopt when part of the path before
/// the head is not simulated yet. Throws std::logic_error without a head.
std::optional<double> verify_column(QuantumState st, const NodeWindow &w, const PathState &path,
                                    const Qubit &input, std::span<const double> angles,
                                    const NoiseModel &noise, std::mt19937_64 &rng);

enum class AngleMode { Identity, Random };

struct EsimConfig {
    ExperimentConfig base{}; ///< algorithm, H, B, p, W (columns), master seed, T_p
    std::vector<double> sigmas{0.0};
    int reps{10};
    AngleMode angles{AngleMode::Identity};
    double v_pi{1.0};
};

struct ColumnFidelity {
    std::int64_t column{0};
    double fidelity{0.0};
};

struct PathSimResult {
    std::uint64_t seed{0};
    Termination termination{Termination::ReachedEnd};
    std::vector<ColumnFidelity> fidelities;
    std::int64_t unverified_columns{0};
    double max_norm_drift{0.0};
};

/// Runs the controller and the simulator in lockstep for one trial and
/// verifies every column boundary.
PathSimResult simulate_path(const ExperimentConfig &cfg, std::uint64_t seed, AngleMode angles,
                            const NoiseModel &noise);

struct FidelityPoint {
    double sigma{0.0};
    std::int64_t column{0};
    double elapsed_ns{0.0};
    double mean_fidelity{0.0};
    double stddev{0.0};
    std::size_t survivors{0};
};

std::vector<FidelityPoint> run_esim(const EsimConfig &cfg);

inline constexpr std::string_view kEsimCsvHeader = "sigma,elapsed_ns,mean_fidelity";
inline constexpr std::string_view kEsimSurvivalCsvHeader = "sigma,elapsed_ns,survivors,stddev";

std::string esim_to_csv(const std::vector<FidelityPoint> &points);
std::string esim_survival_to_csv(const std::vector<FidelityPoint> &points);

} // namespace mbqc
