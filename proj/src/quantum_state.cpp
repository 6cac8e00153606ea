#include "mbqc/quantum_state.hpp"

#include <cmath>
#include <numbers>

namespace mbqc {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
const Amplitude kI{0.0, 1.0};
} // namespace

Qubit Qubit::plus() {
    return {kInvSqrt2, kInvSqrt2};
}

Qubit Qubit::minus() {
    return {kInvSqrt2, -kInvSqrt2};
}

Qubit Qubit::random(std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Amplitude a{g(rng), g(rng)};
    Amplitude b{g(rng), g(rng)};
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    return {a / n, b / n};
}

double fidelity(const Qubit &a, const Qubit &b) {
    return std::norm(std::conj(a.a0) * b.a0 + std::conj(a.a1) * b.a1);
}

QuantumState::QuantumState(std::size_t max_qubits) : max_qubits_(max_qubits) {
    if (max_qubits == 0 || max_qubits > 30) {
        throw CapacityError("statevector capacity must be between 1 and 30 qubits");
    }
}

std::optional<std::size_t> QuantumState::slot_of(Coord c) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == c) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t QuantumState::add_qubit(Coord label, const Qubit &q) {
    if (labels_.size() >= max_qubits_) {
        throw CapacityError("statevector is full (" + std::to_string(max_qubits_) + " qubits)");
    }
    if (slot_of(label)) {
        throw std::invalid_argument("qubit " + to_string(label) + " is already live");
    }
    const std::size_t half = amps_.size();
    amps_.resize(half * 2);
    for (std::size_t i = 0; i < half; ++i) {
        amps_[half + i] = amps_[i] * q.a1;
        amps_[i] *= q.a0;
    }
    labels_.push_back(label);
    return labels_.size() - 1;
}

void QuantumState::cz(std::size_t a, std::size_t b) {
    if (a >= labels_.size() || b >= labels_.size() || a == b) {
        throw std::out_of_range("bad CZ qubit slots");
    }
    const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == mask) {
            amps_[i] = -amps_[i];
        }
    }
}

namespace {

// Coefficients <basis_outcome| for |0>, |1>.
std::pair<Amplitude, Amplitude> bra(const MeasurementBasis &basis, bool outcome) {
    if (!basis.xy_plane) {
        return outcome ? std::pair<Amplitude, Amplitude>{0.0, 1.0}
                       : std::pair<Amplitude, Amplitude>{1.0, 0.0};
    }
    const Amplitude phase = std::exp(-kI * basis.angle);
    const double sign = outcome ? -1.0 : 1.0;
    return {kInvSqrt2, sign * kInvSqrt2 * phase};
}

} // namespace

double QuantumState::probability(std::size_t slot, const MeasurementBasis &basis, bool outcome) const {
    if (slot >= labels_.size()) {
        throw std::out_of_range("bad qubit slot");
    }
    const auto [c0, c1] = bra(basis, outcome);
    const std::size_t bit = std::size_t{1} << slot;
    double p = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) {
            continue;
        }
        p += std::norm(c0 * amps_[i] + c1 * amps_[i | bit]);
    }
    return p;
}

bool QuantumState::measure(std::size_t slot, const MeasurementBasis &basis, std::mt19937_64 &rng,
                           std::optional<bool> forced) {
    const double p0 = probability(slot, basis, false);
    const double total = norm();
    bool outcome = false;
    if (forced) {
        outcome = *forced;
        const double pf = outcome ? total - p0 : p0;
        if (pf <= 1e-14 * total) {
            throw std::domain_error("forced measurement outcome has zero probability");
        }
    } else {
        std::uniform_real_distribution<double> u(0.0, total);
        outcome = u(rng) >= p0;
    }
    const auto [c0, c1] = bra(basis, outcome);
    const std::size_t bit = std::size_t{1} << slot;
    const std::size_t low = bit - 1;
    std::vector<Amplitude> next(amps_.size() / 2);
    double n2 = 0.0;
    for (std::size_t j = 0; j < next.size(); ++j) {
        const std::size_t i = (j & low) | ((j & ~low) << 1);
        next[j] = c0 * amps_[i] + c1 * amps_[i | bit];
        n2 += std::norm(next[j]);
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (auto &a : next) {
        a *= scale;
    }
    amps_ = std::move(next);
    labels_.erase(labels_.begin() + static_cast<std::ptrdiff_t>(slot));
    return outcome;
}

Qubit QuantumState::single_qubit() const {
    if (labels_.size() != 1) {
        throw std::logic_error("register holds " + std::to_string(labels_.size()) +
                               " qubits, expected 1");
    }
    return {amps_[0], amps_[1]};
}

double QuantumState::norm() const {
    double n = 0.0;
    for (const auto &a : amps_) {
        n += std::norm(a);
    }
    return n;
}

void apply_x(Qubit &q) {
    std::swap(q.a0, q.a1);
}

void apply_z(Qubit &q) {
    q.a1 = -q.a1;
}

void apply_h(Qubit &q) {
    const Amplitude a = q.a0;
    const Amplitude b = q.a1;
    q.a0 = kInvSqrt2 * (a + b);
    q.a1 = kInvSqrt2 * (a - b);
}

void apply_rz(Qubit &q, double phi) {
    q.a0 *= std::exp(-kI * (phi / 2));
    q.a1 *= std::exp(kI * (phi / 2));
}

void apply_rx(Qubit &q, double phi) {
    const double c = std::cos(phi / 2);
    const double s = std::sin(phi / 2);
    const Amplitude a = q.a0;
    const Amplitude b = q.a1;
    q.a0 = c * a - kI * s * b;
    q.a1 = -kI * s * a + c * b;
}

} // namespace mbqc
