#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "mbqc/lattice.hpp"

namespace mbqc {

using Amplitude = std::complex<double>;

/// Normalised single-qubit state a0|0> + a1|1>.
struct Qubit {
    Amplitude a0{1.0};
    Amplitude a1{0.0};

    static Qubit zero() { return {1.0, 0.0}; }
    static Qubit one() { return {0.0, 1.0}; }
    static Qubit plus();
    static Qubit minus();
    /// Uniformly random pure state.
    static Qubit random(std::mt19937_64 &rng);

    double norm() const { return std::norm(a0) + std::norm(a1); }
};

/// |<a|b>|^2, insensitive to global phase.
double fidelity(const Qubit &a, const Qubit &b);

struct MeasurementBasis {
    bool xy_plane{false};
    double angle{0.0}; ///< xy-plane: projectors onto (|0> +/- e^{i angle}|1>)/sqrt2

    static MeasurementBasis z() { return {false, 0.0}; }
    static MeasurementBasis xy(double angle) { return {true, angle}; }
};

class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/**
 * Resizing statevector. Qubits are appended as the most significant bit and
 * removed when measured, so the register only ever holds the live columns.
 * Each slot carries the lattice coordinate it represents.
 */
class QuantumState {
public:
    explicit QuantumState(std::size_t max_qubits);

    std::size_t qubit_count() const { return labels_.size(); }
    std::size_t max_qubits() const { return max_qubits_; }
    const std::vector<Coord> &labels() const { return labels_; }
    const std::vector<Amplitude> &amplitudes() const { return amps_; }
    std::optional<std::size_t> slot_of(Coord c) const;

    /// Appends a qubit in state q. Throws CapacityError beyond max_qubits().
    std::size_t add_qubit(Coord label, const Qubit &q = Qubit::plus());
    void cz(std::size_t a, std::size_t b);

    /// Born probability of `outcome` without collapsing.
    double probability(std::size_t slot, const MeasurementBasis &basis, bool outcome) const;
    /// Projective measurement; the qubit is removed and the state renormalised.
    /// `forced` selects the branch instead of sampling (must have nonzero weight).
    bool measure(std::size_t slot, const MeasurementBasis &basis, std::mt19937_64 &rng,
                 std::optional<bool> forced = std::nullopt);

    /// State of the register when exactly one qubit is left.
    Qubit single_qubit() const;
    double norm() const;

private:
    std::size_t max_qubits_;
    std::vector<Amplitude> amps_{Amplitude{1.0}};
    std::vector<Coord> labels_;
};

// Single-qubit gate helpers (act in place).
void apply_x(Qubit &q);
void apply_z(Qubit &q);
void apply_h(Qubit &q);
void apply_rz(Qubit &q, double phi); ///< exp(-i phi Z / 2)
void apply_rx(Qubit &q, double phi); ///< exp(-i phi X / 2)

} // namespace mbqc
