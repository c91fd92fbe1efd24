#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

namespace qlsm {

/// Multichannel input signal on a uniform time grid. Membership in the
/// admissible domain means every sample lies in [-K, K] and consecutive
/// samples move by at most lipschitz * dt per channel.
struct InputSignal {
    int channels = 1;
    double dt = 0.05;
    double bound = 1.0;       // K
    double lipschitz = 10.0;  // K'
    std::vector<std::vector<double>> samples;  // samples[t][channel]

    std::size_t length() const { return samples.size(); }
};

/// Randomly coupled qubit liquid. Couplings are symmetric ZZ strengths with
/// zero diagonal; inputs drive per-node X fields through input_weights.
struct ReservoirGraph {
    int n = 0;  // node count
    int m = 1;  // input channels
    Eigen::MatrixXd couplings;      // n x n, symmetric, zero diagonal, |c| <= 1
    Eigen::MatrixXd input_weights;  // n x m
    double field_scale = 1.0;
    double connectivity_fraction = 0.5;
    std::uint64_t seed = 0;
};

struct LiquidState {
    double t = 0.0;
    std::vector<double> node_expectations;  // per-node <Z>, in [-1, 1]
};

/// A filter reads selected nodes of the trajectory at fixed lags (in
/// samples) behind the most recent entry.
struct Filter {
    std::vector<int> nodes;
    std::vector<int> lags;
};

struct FilterBank {
    std::vector<Filter> filters;

    std::size_t output_size() const;
    std::uint64_t descriptor_hash() const;
    /// Every node once at each of the given lags, one filter per node.
    static FilterBank tapped_delay(int num_nodes, std::vector<int> lags);
};

enum class LiquidInit {
    uniform_superposition,  // every node at <Z> = 0
    all_zero,               // every node in |0>, <Z> = 1
};

/// Liquid evolution controls.
///
/// leak = 0 runs one state vector unitarily across the whole horizon and
/// reports instantaneous Z expectations. Nothing is ever forgotten.
///
/// leak > 0 runs the reset-mixing dynamics that gives the liquid fading
/// memory: the carried liquid state is the vector of node expectations; each
/// step re-prepares the matching product state (Bloch vectors in the XZ
/// half-plane with <X> >= 0), evolves it exactly for dt under the full
/// coupled Hamiltonian, reads the new expectations, and relaxes them toward
/// the uniform-superposition values (all zero) by the leak rate. Old inputs
/// then decay out of the readout at rate (1 - leak) per step.
struct LiquidParams {
    double leak = 0.1;
    LiquidInit init = LiquidInit::uniform_superposition;
};

struct SignalViolation {
    std::size_t sample = 0;
    int channel = 0;
    bool lipschitz = false;  // false: bound violation, true: slope violation
    double value = 0.0;
};

struct ValidityReport {
    bool valid = true;
    std::vector<SignalViolation> violations;
};

struct SeparationReport {
    bool separated = false;
    int witness_filter = -1;
    int witness_component = -1;
    double max_difference = 0.0;
    double threshold = 0.0;
};

struct FadingMemoryReport {
    std::vector<int> windows;            // agreement window lengths, in samples
    std::vector<double> mean_divergence; // mean filter-output distance per window
    std::vector<double> spread;          // standard deviation over pairs
    double leak = 0.0;
    bool certified = false;
    std::string reason;
};

// Desk-scale cap on liquid size (dense 2^n state vectors per step).
inline constexpr int kMaxReservoirNodes = 10;

/// Random liquid topology: each node pair is coupled with probability
/// connectivity_fraction, strengths and input weights uniform in [-1, 1].
/// Identical seeds give identical graphs.
ReservoirGraph build_reservoir(int n, int m, double connectivity_fraction, std::uint64_t seed,
                               double field_scale = 1.0);

/// Incremental liquid driver. run_liquid is a loop over this; learning
/// sessions use it directly so couplings can change between steps.
class LiquidStepper {
public:
    LiquidStepper(const ReservoirGraph& graph, const LiquidParams& params);

    /// Advance one step of dt under the given input sample; returns the
    /// reported node expectations (leaked when leak > 0).
    std::vector<double> step(const std::vector<double>& input, double dt);

    /// Swap in adapted couplings; the carried liquid state is kept.
    void set_couplings(const Eigen::MatrixXd& couplings);

    const ReservoirGraph& graph() const { return graph_; }

private:
    ReservoirGraph graph_;
    LiquidParams params_;
    Eigen::VectorXd zz_diag_;
    Eigen::VectorXcd psi_;          // carried state when leak == 0
    std::vector<double> expectations_;  // carried state when leak > 0
};

/// Drive the liquid with u over [0, horizon] and sample the node
/// expectations at every dt. Sample j of the signal steers step j, so the
/// final sample is reflected in the final liquid state.
std::vector<LiquidState> run_liquid(const ReservoirGraph& graph, const InputSignal& u,
                                    double horizon, const LiquidParams& params = {});

/// Checks the [-K, K] bound and the discrete Lipschitz condition; lists
/// every violating sample.
ValidityReport validate_input(const InputSignal& u);

/// Concatenated outputs of every filter applied to the trajectory.
std::vector<double> apply_filters(const FilterBank& bank, const std::vector<LiquidState>& traj);

/// Runs both signals through the liquid and searches the bank for a filter
/// whose output separates them by more than the threshold.
SeparationReport check_pointwise_separation(const ReservoirGraph& graph, const FilterBank& bank,
                                            const InputSignal& u, const InputSignal& v,
                                            double threshold, const LiquidParams& params = {});

/// Empirical fading-memory certificate. For each window W, signal pairs are
/// built that agree on the final W samples but differ earlier; the curve of
/// mean filter-output divergence against W must be nonincreasing and decay
/// to at most half its initial value to certify. This is a finite-sample
/// check, never a proof of the limit property.
FadingMemoryReport estimate_fading_memory(const ReservoirGraph& graph, const FilterBank& bank,
                                          const InputSignal& base_signal, int num_pairs,
                                          const std::vector<int>& windows,
                                          const LiquidParams& params = {},
                                          std::uint64_t seed = 1);

/// Smooth random signal valid in the domain with margin to spare: amplitude
/// and slope each stay below margin_fraction of their admissible limits.
InputSignal make_smooth_signal(int channels, std::size_t num_samples, double dt, double bound,
                               double lipschitz, double margin_fraction, std::mt19937_64& rng);

// Serialization.
std::string graph_to_json(const ReservoirGraph& g);
ReservoirGraph graph_from_json(const std::string& text);
void write_signal_csv(std::ostream& out, const InputSignal& u);
InputSignal read_signal_csv(std::istream& in, double bound = 1.0, double lipschitz = 10.0,
                            double dt_fallback = 0.05);
void write_trajectory_csv(std::ostream& out, const std::vector<LiquidState>& traj);

}  // namespace qlsm
