#pragma once

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

namespace qlsm {

using cplx = std::complex<double>;

/// Dense state vector over the computational basis of `num_qubits` qubits.
/// Basis index bit k (least significant = qubit 0) holds the state of qubit k.
/// Values are immutable once returned from an operation; every operation
/// produces a new state.
class StateVector {
public:
    StateVector() = default;
    StateVector(int num_qubits, std::vector<cplx> amplitudes);

    /// All-|0> basis state on n qubits.
    static StateVector zero_state(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    cplx amplitude(std::size_t basis_index) const { return amps_.at(basis_index); }

    double norm_squared() const;

private:
    int num_qubits_ = 0;
    std::vector<cplx> amps_;
};

struct MeasurementOutcome {
    int qubit = 0;
    int bit = 0;
    double probability = 0.0;  // squared norm of the projected component
    StateVector post_state;
};

// Maximum qubit count for dense states. Exhaustive verification dominates
// this artifact, so 2^20 amplitudes is the ceiling.
inline constexpr int kMaxQubits = 20;

/// Equal-amplitude superposition of all 2^n basis states (every amplitude
/// 2^(-n/2), real positive). Equivalent to a pi/2 Y-rotation on every qubit
/// of |0...0>.
StateVector uniform_superposition(int num_qubits);

/// Rotation about the Y axis by `angle` on one qubit:
///   RY(a) = [[cos(a/2), -sin(a/2)], [sin(a/2), cos(a/2)]].
StateVector rotate_y(const StateVector& state, int qubit, double angle);

/// <a|b> with the conjugate on the left argument.
cplx inner_product(const StateVector& a, const StateVector& b);

/// Projective Z-measurement of one qubit. Deterministic given the generator
/// state; the post state is renormalized and collapsed onto the outcome.
MeasurementOutcome measure_qubit(const StateVector& state, int qubit, std::mt19937_64& rng);

}  // namespace qlsm
