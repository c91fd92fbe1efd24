#include "qlsm/statevec.hpp"

#include <cmath>
#include <cstdint>

#include "qlsm/errors.hpp"

namespace qlsm {

StateVector::StateVector(int num_qubits, std::vector<cplx> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    if (num_qubits_ < 1 || num_qubits_ > kMaxQubits)
        throw SizeError("StateVector: qubit count " + std::to_string(num_qubits_) +
                        " outside [1, " + std::to_string(kMaxQubits) + "]");
    if (amps_.size() != (std::size_t{1} << num_qubits_))
        throw SizeError("StateVector: amplitude count " + std::to_string(amps_.size()) +
                        " != 2^" + std::to_string(num_qubits_));
}

StateVector StateVector::zero_state(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw SizeError("zero_state: qubit count out of range");
    std::vector<cplx> amps(std::size_t{1} << num_qubits, cplx{0.0, 0.0});
    amps[0] = cplx{1.0, 0.0};
    return StateVector(num_qubits, std::move(amps));
}

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const cplx& a : amps_) s += std::norm(a);
    return s;
}

StateVector uniform_superposition(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw SizeError("uniform_superposition: qubit count " + std::to_string(num_qubits) +
                        " outside [1, " + std::to_string(kMaxQubits) + "]");
    const std::size_t dim = std::size_t{1} << num_qubits;
    const double amp = std::pow(2.0, -0.5 * num_qubits);
    return StateVector(num_qubits, std::vector<cplx>(dim, cplx{amp, 0.0}));
}

StateVector rotate_y(const StateVector& state, int qubit, double angle) {
    if (qubit < 0 || qubit >= state.num_qubits())
        throw IndexError("rotate_y: qubit " + std::to_string(qubit) + " out of range for " +
                         std::to_string(state.num_qubits()) + " qubits");
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    std::vector<cplx> out = state.amplitudes();
    const std::size_t stride = std::size_t{1} << qubit;
    const std::size_t dim = out.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + stride;
            const cplx a0 = out[i0];
            const cplx a1 = out[i1];
            out[i0] = c * a0 - s * a1;
            out[i1] = s * a0 + c * a1;
        }
    }
    return StateVector(state.num_qubits(), std::move(out));
}

cplx inner_product(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits())
        throw SizeError("inner_product: dimension mismatch (" + std::to_string(a.num_qubits()) +
                        " vs " + std::to_string(b.num_qubits()) + " qubits)");
    cplx acc{0.0, 0.0};
    const auto& av = a.amplitudes();
    const auto& bv = b.amplitudes();
    for (std::size_t i = 0; i < av.size(); ++i) acc += std::conj(av[i]) * bv[i];
    return acc;
}

MeasurementOutcome measure_qubit(const StateVector& state, int qubit, std::mt19937_64& rng) {
    if (qubit < 0 || qubit >= state.num_qubits())
        throw IndexError("measure_qubit: qubit index out of range");
    const auto& amps = state.amplitudes();
    const std::size_t mask = std::size_t{1} << qubit;
    double p1 = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i)
        if (i & mask) p1 += std::norm(amps[i]);

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int bit = unit(rng) < p1 ? 1 : 0;
    const double prob = bit ? p1 : 1.0 - p1;
    if (prob <= 0.0)
        throw InternalError("measure_qubit: drew a zero-probability branch");

    const double scale = 1.0 / std::sqrt(prob);
    std::vector<cplx> post(amps.size(), cplx{0.0, 0.0});
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const bool is_one = (i & mask) != 0;
        if (is_one == (bit == 1)) post[i] = amps[i] * scale;
    }
    return MeasurementOutcome{qubit, bit, prob, StateVector(state.num_qubits(), std::move(post))};
}

}  // namespace qlsm
