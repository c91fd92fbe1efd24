#include "qlsm/adiabatic.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <string>

#include "qlsm/errors.hpp"

namespace qlsm {

namespace {

Eigen::VectorXcd to_eigen(const StateVector& s) {
    return Eigen::Map<const Eigen::VectorXcd>(s.amplitudes().data(),
                                              static_cast<Eigen::Index>(s.dim()));
}

StateVector to_state(int num_qubits, const Eigen::VectorXcd& v) {
    return StateVector(num_qubits, std::vector<cplx>(v.data(), v.data() + v.size()));
}

/// (1 - X_j) as a dense matrix on n qubits.
Eigen::MatrixXcd one_minus_x(int num_qubits, int qubit) {
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
    const Eigen::Index stride = Eigen::Index{1} << qubit;
    for (Eigen::Index i = 0; i < dim; ++i) m(i, i ^ stride) -= 1.0;
    return m;
}

void check_same_family(const std::vector<ClauseTerm>& terms) {
    if (terms.empty()) throw ConfigError("clause term list is empty");
    const int n = terms.front().base_part.num_qubits;
    for (const ClauseTerm& t : terms)
        if (t.base_part.num_qubits != n || t.problem_part.num_qubits != n)
            throw SizeError("clause terms disagree on qubit count");
}

}  // namespace

double Hamiltonian::hermiticity_residual() const {
    return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

Schedule::Schedule(double T, int steps) : total_time(T), num_steps(steps) {
    if (!(T > 0.0)) throw ConfigError("Schedule: total time must be > 0");
    if (steps < 1) throw ConfigError("Schedule: step count must be >= 1");
}

Hamiltonian build_base_hamiltonian(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw SizeError("build_base_hamiltonian: qubit count out of range");
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (int j = 0; j < num_qubits; ++j) m += one_minus_x(num_qubits, j);
    return Hamiltonian{num_qubits, std::move(m)};
}

std::vector<ClauseTerm> build_problem_hamiltonian(const SatInstance& inst) {
    if (inst.clauses.empty()) throw ConfigError("build_problem_hamiltonian: no clauses");
    if (inst.num_vars < 1 || inst.num_vars > kMaxQubits)
        throw SizeError("build_problem_hamiltonian: variable count out of range");
    for (const auto& clause : inst.clauses)
        for (const Literal& lit : clause)
            if (lit.var < 0 || lit.var >= inst.num_vars)
                throw IndexError("build_problem_hamiltonian: literal variable out of range");

    const int n = inst.num_vars;
    const Eigen::Index dim = Eigen::Index{1} << n;
    const std::size_t num_clauses = inst.clauses.size();

    // How many clauses mention each variable; orphan variables are shared
    // uniformly so the base parts still sum to the full driver.
    std::vector<int> mentions(n, 0);
    for (const auto& clause : inst.clauses)
        for (const Literal& lit : clause) ++mentions[lit.var];

    std::vector<Eigen::MatrixXcd> base_parts(num_clauses, Eigen::MatrixXcd::Zero(dim, dim));
    for (int v = 0; v < n; ++v) {
        const Eigen::MatrixXcd term = one_minus_x(n, v);
        if (mentions[v] > 0) {
            const double w = 1.0 / mentions[v];
            for (std::size_t c = 0; c < num_clauses; ++c) {
                bool in_clause = false;
                for (const Literal& lit : inst.clauses[c])
                    if (lit.var == v) in_clause = true;
                if (in_clause) base_parts[c] += w * term;
            }
        } else {
            const double w = 1.0 / static_cast<double>(num_clauses);
            for (std::size_t c = 0; c < num_clauses; ++c) base_parts[c] += w * term;
        }
    }

    std::vector<ClauseTerm> terms;
    terms.reserve(num_clauses);
    for (std::size_t c = 0; c < num_clauses; ++c) {
        Eigen::MatrixXcd penalty = Eigen::MatrixXcd::Zero(dim, dim);
        for (Eigen::Index x = 0; x < dim; ++x)
            if (!inst.clause_satisfied(c, static_cast<std::uint64_t>(x))) penalty(x, x) = 1.0;
        terms.push_back(ClauseTerm{static_cast<int>(c), Hamiltonian{n, std::move(base_parts[c])},
                                   Hamiltonian{n, std::move(penalty)}});
    }
    return terms;
}

Hamiltonian interpolate(const std::vector<ClauseTerm>& terms, double s) {
    if (!(s >= 0.0 && s <= 1.0))
        throw DomainError("interpolate: s = " + std::to_string(s) + " outside [0, 1]");
    check_same_family(terms);
    const int n = terms.front().base_part.num_qubits;
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const ClauseTerm& t : terms)
        m += (1.0 - s) * t.base_part.matrix + s * t.problem_part.matrix;
    return Hamiltonian{n, std::move(m)};
}

SpectrumSnapshot spectrum(const Hamiltonian& h, double s) {
    if (h.num_qubits > kMaxDiagQubits)
        throw SizeError("spectrum: dimension 2^" + std::to_string(h.num_qubits) +
                        " exceeds the 2^" + std::to_string(kMaxDiagQubits) +
                        " diagonalization cap");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix);
    if (solver.info() != Eigen::Success)
        throw SolverError("spectrum: eigensolver failed to converge");
    SpectrumSnapshot snap;
    snap.s = s;
    snap.eigenvalues.assign(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + solver.eigenvalues().size());
    snap.ground_state = to_state(h.num_qubits, solver.eigenvectors().col(0));
    return snap;
}

namespace detail {

Eigen::VectorXcd apply_exponential(const Eigen::MatrixXcd& h, double dt,
                                   const Eigen::VectorXcd& v) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success)
        throw SolverError("apply_exponential: eigensolver failed to converge");
    const Eigen::VectorXd& evals = solver.eigenvalues();
    const Eigen::MatrixXcd& evecs = solver.eigenvectors();
    Eigen::VectorXcd coeffs = evecs.adjoint() * v;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k)
        coeffs(k) *= std::exp(std::complex<double>(0.0, -evals(k) * dt));
    return evecs * coeffs;
}

}  // namespace detail

StateVector evolve(const std::vector<ClauseTerm>& terms, const Schedule& schedule,
                   const StateVector& initial) {
    check_same_family(terms);
    const int n = terms.front().base_part.num_qubits;
    if (initial.num_qubits() != n) throw SizeError("evolve: initial state dimension mismatch");
    if (n > kMaxDiagQubits)
        throw SizeError("evolve: dimension exceeds the diagonalization cap");

    const int min_steps = std::max(1, static_cast<int>(std::ceil(10.0 * schedule.total_time)));
    if (schedule.num_steps < min_steps)
        throw ConfigError("evolve: schedule needs at least " + std::to_string(min_steps) +
                          " steps for T = " + std::to_string(schedule.total_time) +
                          " (10 per unit time), got " + std::to_string(schedule.num_steps));

    const double dt = schedule.dt();
    Eigen::VectorXcd psi = to_eigen(initial);
    for (int k = 0; k < schedule.num_steps; ++k) {
        const double s_mid = (k + 0.5) * dt / schedule.total_time;
        const Hamiltonian h = interpolate(terms, std::min(s_mid, 1.0));
        psi = detail::apply_exponential(h.matrix, dt, psi);
    }
    return to_state(n, psi);
}

OverlapResult overlap_with_final_ground(const std::vector<ClauseTerm>& terms,
                                        const Schedule& schedule, const StateVector& initial) {
    const StateVector final_state = evolve(terms, schedule, initial);
    const Hamiltonian h_final = interpolate(terms, 1.0);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h_final.matrix);
    if (solver.info() != Eigen::Success)
        throw SolverError("overlap_with_final_ground: eigensolver failed");
    const Eigen::VectorXd& evals = solver.eigenvalues();
    const Eigen::MatrixXcd& evecs = solver.eigenvectors();

    // Everything within tolerance of E_0 counts as the ground eigenspace.
    constexpr double kDegeneracyTol = 1e-8;
    const double e0 = evals(0);
    Eigen::Index ground_dim = 1;
    while (ground_dim < evals.size() && evals(ground_dim) - e0 < kDegeneracyTol) ++ground_dim;

    const Eigen::VectorXcd psi = to_eigen(final_state);
    double proj_sq = 0.0;
    for (Eigen::Index k = 0; k < ground_dim; ++k) {
        const std::complex<double> c = evecs.col(k).dot(psi);  // Eigen dot conjugates the left side
        proj_sq += std::norm(c);
    }
    return OverlapResult{std::sqrt(std::min(proj_sq, 1.0 + 1e-12)), ground_dim > 1};
}

std::vector<std::pair<double, double>> gap_profile(const std::vector<ClauseTerm>& terms,
                                                   int num_samples) {
    check_same_family(terms);
    if (num_samples < 1) throw ConfigError("gap_profile: need at least one sample");
    std::vector<std::pair<double, double>> profile;
    profile.reserve(num_samples);
    for (int i = 0; i < num_samples; ++i) {
        const double s = num_samples == 1 ? 0.0 : static_cast<double>(i) / (num_samples - 1);
        const Hamiltonian h = interpolate(terms, s);
        const SpectrumSnapshot snap = spectrum(h, s);
        const double gap =
            snap.eigenvalues.size() > 1 ? snap.eigenvalues[1] - snap.eigenvalues[0] : 0.0;
        profile.emplace_back(s, gap);
    }
    return profile;
}

}  // namespace qlsm
