#include "qlsm/hebbian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qlsm/errors.hpp"

namespace qlsm {

namespace {

void check_pattern(const std::vector<double>& pattern, int dim) {
    if (static_cast<int>(pattern.size()) != dim)
        throw SizeError("art: pattern has " + std::to_string(pattern.size()) +
                        " entries, network expects " + std::to_string(dim));
    for (double v : pattern)
        if (v < -1e-9 || v > 1.0 + 1e-9)
            throw DomainError("art: pattern entry " + std::to_string(v) + " outside [0, 1]");
}

void check_activity(const std::vector<double>& a, int n, const char* which) {
    if (static_cast<int>(a.size()) != n)
        throw SizeError(std::string("hebbian_update: ") + which + " activity has wrong length");
    for (double v : a)
        if (v < -1.0 - 1e-9 || v > 1.0 + 1e-9)
            throw DomainError(std::string("hebbian_update: ") + which +
                              " activity outside [-1, 1]");
}

}  // namespace

std::vector<bool> ContextNetwork::active_mask(int category) const {
    if (category < 0 || category >= static_cast<int>(prototypes.size()))
        throw IndexError("active_mask: category out of range");
    std::vector<bool> mask(input_dim, false);
    for (int i = 0; i < input_dim; ++i) mask[i] = prototypes[category][i] >= 0.5;
    return mask;
}

double art_match(const std::vector<double>& pattern, const std::vector<double>& prototype) {
    if (pattern.size() != prototype.size())
        throw SizeError("art_match: dimension mismatch");
    double inter = 0.0, total = 0.0;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        inter += std::min(pattern[i], prototype[i]);
        total += pattern[i];
    }
    if (total < 1e-12) return 1.0;
    return inter / total;
}

int art_categorize(ContextNetwork& net, const std::vector<double>& pattern) {
    check_pattern(pattern, net.input_dim);
    if (!(net.vigilance > 0.0 && net.vigilance <= 1.0))
        throw ConfigError("art: vigilance must be in (0, 1]");
    if (!(net.learning_rate > 0.0 && net.learning_rate <= 1.0))
        throw ConfigError("art: learning rate must be in (0, 1]");

    int best = -1;
    double best_match = -1.0;
    for (std::size_t c = 0; c < net.prototypes.size(); ++c) {
        const double m = art_match(pattern, net.prototypes[c]);
        if (m > best_match) {
            best_match = m;
            best = static_cast<int>(c);
        }
    }

    if (best < 0 || best_match < net.vigilance) {
        // Found a new context: prototype sits on the pattern, links signed
        // positive toward active inputs and negative toward inactive ones.
        net.prototypes.push_back(pattern);
        std::vector<double> links(pattern.size());
        for (std::size_t i = 0; i < pattern.size(); ++i) links[i] = 2.0 * pattern[i] - 1.0;
        net.context_links.push_back(std::move(links));
        return static_cast<int>(net.prototypes.size()) - 1;
    }

    const double lr = net.learning_rate;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        net.prototypes[best][i] += lr * (pattern[i] - net.prototypes[best][i]);
        net.prototypes[best][i] = std::clamp(net.prototypes[best][i], 0.0, 1.0);
        const double target = 2.0 * pattern[i] - 1.0;
        net.context_links[best][i] += lr * (target - net.context_links[best][i]);
    }
    return best;
}

Eigen::MatrixXd hebbian_update(const Eigen::MatrixXd& couplings,
                               const std::vector<double>& pre_activity,
                               const std::vector<double>& post_activity,
                               const HebbianConfig& cfg, const ContextNetwork& net,
                               int category) {
    const int n = static_cast<int>(couplings.rows());
    if (couplings.cols() != n) throw SizeError("hebbian_update: coupling matrix not square");
    check_activity(pre_activity, n, "pre");
    check_activity(post_activity, n, "post");
    if (!(cfg.rate > 0.0 && cfg.rate <= 1.0))
        throw ConfigError("hebbian_update: rate must be in (0, 1]");
    if (!(cfg.weight_cap > 0.0)) throw ConfigError("hebbian_update: weight cap must be > 0");
    if (!(cfg.decay >= 0.0 && cfg.decay < 1.0))
        throw ConfigError("hebbian_update: decay must be in [0, 1)");
    const std::vector<bool> gate = net.active_mask(category);
    if (static_cast<int>(gate.size()) != n)
        throw SizeError("hebbian_update: context network dimension mismatch");

    Eigen::MatrixXd out = couplings * (1.0 - cfg.decay);
    out.diagonal().setZero();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (gate[i] && gate[j]) {
                const double delta =
                    cfg.rate * 0.5 *
                    (pre_activity[i] * post_activity[j] + pre_activity[j] * post_activity[i]);
                out(i, j) += delta;
            }
            out(i, j) = std::clamp(out(i, j), -cfg.weight_cap, cfg.weight_cap);
            out(j, i) = out(i, j);
        }
    return out;
}

SessionResult unsupervised_session(const ReservoirGraph& graph,
                                   const std::vector<InputSignal>& signals, ContextNetwork net,
                                   const HebbianConfig& cfg, int epochs,
                                   const LiquidParams& params) {
    if (epochs < 0) throw ConfigError("unsupervised_session: epochs must be >= 0");
    if (net.input_dim != graph.n)
        throw SizeError("unsupervised_session: context network dimension != node count");
    for (const InputSignal& u : signals) {
        const ValidityReport r = validate_input(u);
        if (!r.valid)
            throw DomainError("unsupervised_session: signal leaves the admissible domain at "
                              "sample " +
                              std::to_string(r.violations.front().sample));
        if (u.channels != graph.m)
            throw SizeError("unsupervised_session: signal channel count != graph input count");
    }

    SessionResult result;
    result.adapted = graph;
    if (epochs == 0 || signals.empty()) {
        result.network = std::move(net);
        return result;
    }

    LiquidStepper stepper(graph, params);
    std::vector<double> prev(graph.n, 0.0);
    for (int i = 0; i < graph.n; ++i)
        prev[i] = params.init == LiquidInit::all_zero ? 1.0 : 0.0;

    int step_index = 0;
    for (int epoch = 0; epoch < epochs; ++epoch) {
        for (const InputSignal& u : signals) {
            for (const auto& sample : u.samples) {
                const std::vector<double> cur = stepper.step(sample, u.dt);

                std::vector<double> pattern(cur.size());
                for (std::size_t i = 0; i < cur.size(); ++i)
                    pattern[i] = std::clamp((cur[i] + 1.0) / 2.0, 0.0, 1.0);
                const int category = art_categorize(net, pattern);

                Eigen::MatrixXd updated =
                    hebbian_update(stepper.graph().couplings, prev, cur, cfg, net, category);
                stepper.set_couplings(updated);

                SessionStep log_entry;
                log_entry.step = step_index++;
                log_entry.category = category;
                log_entry.coupling_snapshot.reserve(graph.n * (graph.n - 1) / 2);
                for (int i = 0; i < graph.n; ++i)
                    for (int j = i + 1; j < graph.n; ++j)
                        log_entry.coupling_snapshot.push_back(updated(i, j));
                result.log.push_back(std::move(log_entry));
                prev = cur;
            }
        }
    }
    result.adapted = stepper.graph();
    result.network = std::move(net);
    return result;
}

}  // namespace qlsm
