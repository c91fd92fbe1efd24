#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qlsm/reservoir.hpp"

namespace qlsm {

/// Online prototype categorizer in the adaptive-resonance style. Inputs are
/// patterns in [0,1]^n; a pattern joins the best-matching category if the
/// match clears the vigilance threshold, otherwise it founds a new one.
/// Signed context links run from each category node to the input nodes;
/// input nodes never carry negative links to each other.
struct ContextNetwork {
    int input_dim = 0;
    double vigilance = 0.9;      // (0, 1]
    double learning_rate = 0.5;  // (0, 1]
    std::vector<std::vector<double>> prototypes;     // per category, in [0,1]^n
    std::vector<std::vector<double>> context_links;  // per category, signed

    std::size_t num_categories() const { return prototypes.size(); }
    /// Nodes counted as active in a category's context (prototype >= 0.5).
    std::vector<bool> active_mask(int category) const;
};

/// Normalized min-intersection match: |min(pattern, prototype)|_1 /
/// |pattern|_1. An all-zero pattern matches everything.
double art_match(const std::vector<double>& pattern, const std::vector<double>& prototype);

/// Categorize a pattern, creating a category when nothing clears the
/// vigilance. The winning prototype and its context links move toward the
/// pattern by the learning rate. Returns the category index.
int art_categorize(ContextNetwork& net, const std::vector<double>& pattern);

struct HebbianConfig {
    double rate = 0.05;      // (0, 1]
    double weight_cap = 1.0; // > 0
    double decay = 0.001;    // [0, 1)
};

/// One co-activation update of the coupling matrix. Every entry first decays
/// multiplicatively; pairs whose two nodes are active in the current
/// category's context then gain eta * (pre_i post_j + pre_j post_i) / 2,
/// applied to both directions and clipped to the weight cap. Symmetry and
/// the zero diagonal are preserved.
Eigen::MatrixXd hebbian_update(const Eigen::MatrixXd& couplings,
                               const std::vector<double>& pre_activity,
                               const std::vector<double>& post_activity,
                               const HebbianConfig& cfg, const ContextNetwork& net,
                               int category);

struct SessionStep {
    int step = 0;
    int category = 0;
    std::vector<double> coupling_snapshot;  // upper triangle, row-major
};

struct SessionResult {
    ReservoirGraph adapted;
    ContextNetwork network;
    std::vector<SessionStep> log;
};

/// Unsupervised run: the liquid is driven by the signals in order while the
/// couplings adapt in place. Each step reads the liquid state, rescales it
/// to [0,1] for categorization, and applies the context-gated Hebbian rule
/// with the previous step's activity as pre and the current one as post.
/// epochs = 0 returns the graph unchanged.
SessionResult unsupervised_session(const ReservoirGraph& graph,
                                   const std::vector<InputSignal>& signals, ContextNetwork net,
                                   const HebbianConfig& cfg, int epochs,
                                   const LiquidParams& params = {});

}  // namespace qlsm
