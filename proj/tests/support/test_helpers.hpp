#pragma once

// Independent constructions used as oracles by the test suites. Everything
// here builds operators by explicit Kronecker products and evaluates CNF
// clauses directly, so it shares no code path with the library.

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "qlsm/sat.hpp"

namespace testsup {

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline Eigen::MatrixXcd pauli_x() {
    Eigen::MatrixXcd x(2, 2);
    x << 0, 1, 1, 0;
    return x;
}

inline Eigen::MatrixXcd pauli_z() {
    Eigen::MatrixXcd z(2, 2);
    z << 1, 0, 0, -1;
    return z;
}

// Operator acting as `op` on one qubit and identity elsewhere. Qubit 0 is
// the least significant basis bit, so it is the rightmost Kronecker factor.
inline Eigen::MatrixXcd op_on_qubit(int num_qubits, int qubit, const Eigen::MatrixXcd& op) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = num_qubits - 1; q >= 0; --q) {
        if (q == qubit)
            out = kron(out, op);
        else
            out = kron(out, Eigen::MatrixXcd::Identity(2, 2));
    }
    return out;
}

// Direct clause evaluation on an explicit boolean assignment.
inline bool clause_holds(const std::vector<qlsm::Literal>& clause,
                         const std::vector<bool>& assignment) {
    for (const qlsm::Literal& lit : clause) {
        const bool value = assignment[static_cast<std::size_t>(lit.var)];
        if (lit.negated ? !value : value) return true;
    }
    return false;
}

inline std::vector<bool> assignment_bits(std::uint64_t x, int num_vars) {
    std::vector<bool> bits(num_vars);
    for (int v = 0; v < num_vars; ++v) bits[v] = (x >> v) & 1;
    return bits;
}

inline int violations_by_enumeration(const qlsm::SatInstance& inst, std::uint64_t x) {
    const std::vector<bool> bits = assignment_bits(x, inst.num_vars);
    int violated = 0;
    for (const auto& clause : inst.clauses)
        if (!clause_holds(clause, bits)) ++violated;
    return violated;
}

inline qlsm::SatInstance random_cnf(int num_vars, int num_clauses, int clause_len,
                                    std::mt19937_64& rng) {
    qlsm::SatInstance inst;
    inst.num_vars = num_vars;
    std::uniform_int_distribution<int> var(0, num_vars - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int c = 0; c < num_clauses; ++c) {
        std::vector<qlsm::Literal> clause;
        for (int l = 0; l < clause_len; ++l)
            clause.push_back(qlsm::Literal{var(rng), coin(rng) == 1});
        inst.clauses.push_back(std::move(clause));
    }
    return inst;
}

}  // namespace testsup
