#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "qlsm/sat.hpp"
#include "qlsm/statevec.hpp"

namespace qlsm {

/// Hermitian operator on n qubits, dense.
struct Hamiltonian {
    int num_qubits = 0;
    Eigen::MatrixXcd matrix;

    std::size_t dim() const { return static_cast<std::size_t>(matrix.rows()); }
    /// max |H - H^dagger| over all entries.
    double hermiticity_residual() const;
};

/// One clause's share of the interpolated family. Summed over clauses the
/// base parts give the full driver Hamiltonian and the problem parts the
/// full penalty Hamiltonian.
struct ClauseTerm {
    int clause_id = 0;
    Hamiltonian base_part;
    Hamiltonian problem_part;
};

struct SpectrumSnapshot {
    double s = 0.0;
    std::vector<double> eigenvalues;  // ascending
    StateVector ground_state;
};

/// Linear schedule s(t) = t/T over [0, T].
struct Schedule {
    double total_time = 1.0;
    int num_steps = 1;

    Schedule(double T, int steps);
    double dt() const { return total_time / num_steps; }
};

// Full diagonalization is capped at 12 qubits (4096-dim dense eigensolve).
inline constexpr int kMaxDiagQubits = 12;

/// Driver Hamiltonian: sum over qubits of (1 - X_j). Ground state is the
/// uniform superposition with energy 0; spectrum is {0, 2, ..., 2n}.
Hamiltonian build_base_hamiltonian(int num_qubits);

/// Per-clause interpolation terms for a CNF instance.
///
/// problem_part of clause C is diagonal with entry 1 on assignments that
/// violate C, so the summed penalty counts violated clauses and has ground
/// energy 0 exactly when the instance is satisfiable. base_part splits the
/// driver over clauses: each variable's (1 - X_j) term is shared equally
/// among the clauses that mention it; variables mentioned by no clause are
/// spread uniformly over all clauses so the parts still sum to the driver.
std::vector<ClauseTerm> build_problem_hamiltonian(const SatInstance& inst);

/// (1-s) * sum of base parts + s * sum of problem parts.
Hamiltonian interpolate(const std::vector<ClauseTerm>& terms, double s);

/// Eigen-decomposition snapshot at interpolation parameter s.
SpectrumSnapshot spectrum(const Hamiltonian& h, double s);

/// Integrate the Schrodinger equation across the schedule with fixed steps,
/// each step applying the exact exponential of the midpoint Hamiltonian.
/// Requires at least 10 steps per unit time.
StateVector evolve(const std::vector<ClauseTerm>& terms, const Schedule& schedule,
                   const StateVector& initial);

struct OverlapResult {
    double value = 0.0;      // |<ground(s=1)|psi(T)>|, or the projection norm
    bool degenerate = false; // true if the final ground level is degenerate
};

/// Overlap of the evolved state with the final ground level. If that level
/// is degenerate the result is the norm of the projection onto the whole
/// ground eigenspace, flagged as such.
OverlapResult overlap_with_final_ground(const std::vector<ClauseTerm>& terms,
                                        const Schedule& schedule, const StateVector& initial);

/// (s, E_1 - E_0) at evenly spaced sample points across [0, 1].
std::vector<std::pair<double, double>> gap_profile(const std::vector<ClauseTerm>& terms,
                                                   int num_samples);

// Shared plumbing for modules that exponentiate Hamiltonians.
namespace detail {
/// exp(-i * H * dt) applied to a vector, via eigendecomposition of H.
Eigen::VectorXcd apply_exponential(const Eigen::MatrixXcd& h, double dt,
                                   const Eigen::VectorXcd& v);
}  // namespace detail

}  // namespace qlsm
