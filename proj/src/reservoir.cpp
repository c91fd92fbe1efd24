#include "qlsm/reservoir.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qlsm/adiabatic.hpp"
#include "qlsm/errors.hpp"
#include "qlsm/rng.hpp"

namespace qlsm {

namespace {

using json = nlohmann::json;

/// Diagonal of the ZZ part: entry x is sum over coupled pairs of
/// c_ij * z_i(x) * z_j(x) with z = +1 for bit 0.
Eigen::VectorXd coupling_diagonal(const ReservoirGraph& g) {
    const Eigen::Index dim = Eigen::Index{1} << g.n;
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            const double c = g.couplings(i, j);
            if (c == 0.0) continue;
            for (Eigen::Index x = 0; x < dim; ++x) {
                const double zi = (x >> i) & 1 ? -1.0 : 1.0;
                const double zj = (x >> j) & 1 ? -1.0 : 1.0;
                diag(x) += c * zi * zj;
            }
        }
    return diag;
}

/// H(u) = diag(ZZ couplings) + sum_i g_i X_i with g = field_scale * W u.
Eigen::MatrixXcd hamiltonian_at(const ReservoirGraph& g, const Eigen::VectorXd& zz_diag,
                                const std::vector<double>& input) {
    const Eigen::Index dim = Eigen::Index{1} << g.n;
    Eigen::VectorXd drive = Eigen::VectorXd::Zero(g.n);
    for (int i = 0; i < g.n; ++i) {
        double acc = 0.0;
        for (int ch = 0; ch < g.m; ++ch) acc += g.input_weights(i, ch) * input[ch];
        drive(i) = g.field_scale * acc;
    }
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    h.diagonal() = zz_diag.cast<std::complex<double>>();
    for (Eigen::Index x = 0; x < dim; ++x)
        for (int i = 0; i < g.n; ++i)
            if (drive(i) != 0.0) h(x ^ (Eigen::Index{1} << i), x) += drive(i);
    return h;
}

/// Product state with per-node <Z> = r_i and <X> = sqrt(1 - r_i^2).
Eigen::VectorXcd product_state(const std::vector<double>& r) {
    const int n = static_cast<int>(r.size());
    std::vector<double> amp0(n), amp1(n);
    for (int i = 0; i < n; ++i) {
        const double z = std::clamp(r[i], -1.0, 1.0);
        const double theta = std::acos(z);
        amp0[i] = std::cos(theta / 2.0);
        amp1[i] = std::sin(theta / 2.0);
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::VectorXcd psi(dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        double a = 1.0;
        for (int i = 0; i < n; ++i) a *= ((x >> i) & 1) ? amp1[i] : amp0[i];
        psi(x) = a;
    }
    return psi;
}

std::vector<double> z_expectations(const Eigen::VectorXcd& psi, int n) {
    std::vector<double> z(n, 0.0);
    for (Eigen::Index x = 0; x < psi.size(); ++x) {
        const double p = std::norm(psi(x));
        if (p == 0.0) continue;
        for (int i = 0; i < n; ++i) z[i] += ((x >> i) & 1) ? -p : p;
    }
    for (double& v : z) v = std::clamp(v, -1.0, 1.0);
    return z;
}

std::vector<double> initial_expectations(int n, LiquidInit init) {
    return std::vector<double>(n, init == LiquidInit::all_zero ? 1.0 : 0.0);
}

void require_valid(const InputSignal& u) {
    const ValidityReport report = validate_input(u);
    if (!report.valid) {
        const SignalViolation& v = report.violations.front();
        throw DomainError(std::string("input signal leaves the admissible domain: ") +
                          (v.lipschitz ? "slope" : "bound") + " violation at sample " +
                          std::to_string(v.sample) + ", channel " + std::to_string(v.channel) +
                          " (value " + std::to_string(v.value) + ")");
    }
}

}  // namespace

std::size_t FilterBank::output_size() const {
    std::size_t total = 0;
    for (const Filter& f : filters) total += f.nodes.size() * f.lags.size();
    return total;
}

std::uint64_t FilterBank::descriptor_hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const Filter& f : filters) {
        h = fnv1a64("F", h);
        for (int nd : f.nodes) h = fnv1a64_u64(static_cast<std::uint64_t>(nd), h);
        h = fnv1a64("L", h);
        for (int lg : f.lags) h = fnv1a64_u64(static_cast<std::uint64_t>(lg), h);
    }
    return h;
}

FilterBank FilterBank::tapped_delay(int num_nodes, std::vector<int> lags) {
    FilterBank bank;
    for (int i = 0; i < num_nodes; ++i) bank.filters.push_back(Filter{{i}, lags});
    return bank;
}

ReservoirGraph build_reservoir(int n, int m, double connectivity_fraction, std::uint64_t seed,
                               double field_scale) {
    if (n < 1 || n > kMaxReservoirNodes)
        throw SizeError("build_reservoir: node count " + std::to_string(n) + " outside [1, " +
                        std::to_string(kMaxReservoirNodes) + "]");
    if (m < 1) throw SizeError("build_reservoir: need at least one input channel");
    if (!(connectivity_fraction > 0.0 && connectivity_fraction <= 1.0))
        throw ConfigError("build_reservoir: connectivity fraction must be in (0, 1]");

    ReservoirGraph g;
    g.n = n;
    g.m = m;
    g.field_scale = field_scale;
    g.connectivity_fraction = connectivity_fraction;
    g.seed = seed;
    g.couplings = Eigen::MatrixXd::Zero(n, n);
    g.input_weights = Eigen::MatrixXd::Zero(n, m);

    std::mt19937_64 rng = make_rng(seed, "reservoir-graph");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const bool connected = unit(rng) < connectivity_fraction;
            const double strength = sym(rng);  // drawn either way to keep streams aligned
            if (connected) {
                g.couplings(i, j) = strength;
                g.couplings(j, i) = strength;
            }
        }
    for (int i = 0; i < n; ++i)
        for (int ch = 0; ch < m; ++ch) g.input_weights(i, ch) = sym(rng);
    return g;
}

ValidityReport validate_input(const InputSignal& u) {
    ValidityReport report;
    const double bound_tol = u.bound + 1e-12;
    const double step_tol = u.lipschitz * u.dt + 1e-12;
    for (std::size_t t = 0; t < u.samples.size(); ++t) {
        if (static_cast<int>(u.samples[t].size()) != u.channels) {
            report.valid = false;
            report.violations.push_back(SignalViolation{t, -1, false, 0.0});
            continue;
        }
        for (int ch = 0; ch < u.channels; ++ch) {
            const double v = u.samples[t][ch];
            if (std::abs(v) > bound_tol) {
                report.valid = false;
                report.violations.push_back(SignalViolation{t, ch, false, v});
            }
            if (t > 0) {
                const double step = std::abs(v - u.samples[t - 1][ch]);
                if (step > step_tol) {
                    report.valid = false;
                    report.violations.push_back(SignalViolation{t, ch, true, step});
                }
            }
        }
    }
    return report;
}

LiquidStepper::LiquidStepper(const ReservoirGraph& graph, const LiquidParams& params)
    : graph_(graph), params_(params) {
    if (graph_.n < 1 || graph_.n > kMaxReservoirNodes)
        throw SizeError("liquid: node count out of range");
    if (!(params_.leak >= 0.0 && params_.leak <= 1.0))
        throw ConfigError("liquid: leak rate must be in [0, 1]");
    zz_diag_ = coupling_diagonal(graph_);
    expectations_ = initial_expectations(graph_.n, params_.init);
    if (params_.leak == 0.0) psi_ = product_state(expectations_);
}

std::vector<double> LiquidStepper::step(const std::vector<double>& input, double dt) {
    if (static_cast<int>(input.size()) != graph_.m)
        throw SizeError("liquid step: input sample has wrong channel count");
    const Eigen::MatrixXcd h = hamiltonian_at(graph_, zz_diag_, input);
    if (params_.leak == 0.0) {
        // Pure unitary run: one persistent state vector across the horizon.
        psi_ = detail::apply_exponential(h, dt, psi_);
        expectations_ = z_expectations(psi_, graph_.n);
        return expectations_;
    }
    // Reset mixing: the carried liquid state is the expectation vector.
    const Eigen::VectorXcd evolved =
        detail::apply_exponential(h, dt, product_state(expectations_));
    const std::vector<double> q = z_expectations(evolved, graph_.n);
    for (int i = 0; i < graph_.n; ++i) expectations_[i] = (1.0 - params_.leak) * q[i];
    return expectations_;
}

void LiquidStepper::set_couplings(const Eigen::MatrixXd& couplings) {
    if (couplings.rows() != graph_.n || couplings.cols() != graph_.n)
        throw SizeError("liquid: coupling matrix has wrong shape");
    graph_.couplings = couplings;
    zz_diag_ = coupling_diagonal(graph_);
}

std::vector<LiquidState> run_liquid(const ReservoirGraph& graph, const InputSignal& u,
                                    double horizon, const LiquidParams& params) {
    if (u.channels != graph.m)
        throw SizeError("run_liquid: signal has " + std::to_string(u.channels) +
                        " channels, graph expects " + std::to_string(graph.m));
    const int steps = static_cast<int>(std::llround(horizon / u.dt));
    if (steps < 1) throw ConfigError("run_liquid: horizon shorter than one step");
    if (static_cast<std::size_t>(steps) > u.length())
        throw ConfigError("run_liquid: signal has " + std::to_string(u.length()) +
                          " samples, horizon needs " + std::to_string(steps));
    require_valid(u);

    LiquidStepper stepper(graph, params);
    std::vector<LiquidState> traj;
    traj.reserve(steps);
    for (int k = 0; k < steps; ++k)
        traj.push_back(LiquidState{(k + 1) * u.dt, stepper.step(u.samples[k], u.dt)});
    return traj;
}

std::vector<double> apply_filters(const FilterBank& bank, const std::vector<LiquidState>& traj) {
    if (traj.empty()) throw ConfigError("apply_filters: empty trajectory");
    std::vector<double> out;
    out.reserve(bank.output_size());
    const std::size_t last = traj.size() - 1;
    for (const Filter& f : bank.filters)
        for (int node : f.nodes)
            for (int lag : f.lags) {
                if (lag < 0 || static_cast<std::size_t>(lag) > last)
                    throw IndexError("apply_filters: lag " + std::to_string(lag) +
                                     " exceeds trajectory length " + std::to_string(traj.size()));
                const LiquidState& state = traj[last - lag];
                if (node < 0 || node >= static_cast<int>(state.node_expectations.size()))
                    throw IndexError("apply_filters: node index " + std::to_string(node) +
                                     " out of range");
                out.push_back(state.node_expectations[node]);
            }
    return out;
}

SeparationReport check_pointwise_separation(const ReservoirGraph& graph, const FilterBank& bank,
                                            const InputSignal& u, const InputSignal& v,
                                            double threshold, const LiquidParams& params) {
    if (u.channels != v.channels || u.length() != v.length() || u.dt != v.dt)
        throw SizeError("check_pointwise_separation: signals live on different grids");
    if (u.samples == v.samples)
        throw PreconditionError("check_pointwise_separation: signals are identical at every "
                                "sample");
    require_valid(u);
    require_valid(v);

    const double horizon = static_cast<double>(u.length()) * u.dt;
    const auto traj_u = run_liquid(graph, u, horizon, params);
    const auto traj_v = run_liquid(graph, v, horizon, params);

    SeparationReport report;
    report.threshold = threshold;
    for (std::size_t f = 0; f < bank.filters.size(); ++f) {
        FilterBank single{{bank.filters[f]}};
        const std::vector<double> out_u = apply_filters(single, traj_u);
        const std::vector<double> out_v = apply_filters(single, traj_v);
        for (std::size_t c = 0; c < out_u.size(); ++c) {
            const double diff = std::abs(out_u[c] - out_v[c]);
            if (diff > report.max_difference) {
                report.max_difference = diff;
                report.witness_filter = static_cast<int>(f);
                report.witness_component = static_cast<int>(c);
            }
        }
    }
    report.separated = report.max_difference > threshold;
    if (!report.separated) {
        report.witness_filter = -1;
        report.witness_component = -1;
    }
    return report;
}

InputSignal make_smooth_signal(int channels, std::size_t num_samples, double dt, double bound,
                               double lipschitz, double margin_fraction, std::mt19937_64& rng) {
    InputSignal u;
    u.channels = channels;
    u.dt = dt;
    u.bound = bound;
    u.lipschitz = lipschitz;
    u.samples.assign(num_samples, std::vector<double>(channels, 0.0));

    std::uniform_real_distribution<double> freq(0.3, 3.0);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    constexpr int kHarmonics = 3;
    for (int ch = 0; ch < channels; ++ch) {
        double a[kHarmonics], w[kHarmonics], p[kHarmonics];
        double amp_sum = 0.0, slope_sum = 0.0;
        for (int h = 0; h < kHarmonics; ++h) {
            a[h] = coef(rng);
            w[h] = freq(rng);
            p[h] = phase(rng);
            amp_sum += std::abs(a[h]);
            slope_sum += std::abs(a[h]) * w[h];
        }
        const double scale =
            std::min(margin_fraction * bound / amp_sum, margin_fraction * lipschitz / slope_sum);
        for (std::size_t t = 0; t < num_samples; ++t) {
            double v = 0.0;
            for (int h = 0; h < kHarmonics; ++h) v += a[h] * std::sin(w[h] * t * dt + p[h]);
            u.samples[t][ch] = scale * v;
        }
    }
    return u;
}

FadingMemoryReport estimate_fading_memory(const ReservoirGraph& graph, const FilterBank& bank,
                                          const InputSignal& base_signal, int num_pairs,
                                          const std::vector<int>& windows,
                                          const LiquidParams& params, std::uint64_t seed) {
    if (num_pairs < 10)
        throw PreconditionError("estimate_fading_memory: need at least 10 pairs");
    if (windows.empty()) throw ConfigError("estimate_fading_memory: no windows given");
    for (std::size_t i = 1; i < windows.size(); ++i)
        if (windows[i] <= windows[i - 1])
            throw ConfigError("estimate_fading_memory: windows must be strictly increasing");
    const std::size_t len = base_signal.length();
    if (windows.front() < 0 || static_cast<std::size_t>(windows.back()) > len)
        throw ConfigError("estimate_fading_memory: window of " + std::to_string(windows.back()) +
                          " samples exceeds the " + std::to_string(len) + "-sample trajectory");
    require_valid(base_signal);

    const double horizon = static_cast<double>(len) * base_signal.dt;
    const auto base_traj = run_liquid(graph, base_signal, horizon, params);
    const std::vector<double> base_out = apply_filters(bank, base_traj);

    // Headroom for the perturbation on top of the base signal.
    double base_peak = 0.0;
    for (const auto& row : base_signal.samples)
        for (double v : row) base_peak = std::max(base_peak, std::abs(v));
    const double amp_margin = std::max(0.0, base_signal.bound - base_peak) * 0.9;

    std::mt19937_64 rng = make_rng(seed, "fading-memory-pairs");
    std::uniform_real_distribution<double> mag(0.5, 1.0);
    std::uniform_int_distribution<int> sign(0, 1);

    FadingMemoryReport report;
    report.windows = windows;
    report.leak = params.leak;

    for (int w : windows) {
        const std::size_t agree_from = len - static_cast<std::size_t>(w);
        std::vector<double> divergences;
        divergences.reserve(num_pairs);
        for (int p = 0; p < num_pairs; ++p) {
            InputSignal v = base_signal;
            // Smooth bump strictly before the agreement window, per channel.
            for (int ch = 0; ch < v.channels; ++ch) {
                if (agree_from == 0) break;
                const double dir = sign(rng) ? 1.0 : -1.0;
                const double slope_cap = 0.45 * v.lipschitz * (agree_from * v.dt) / M_PI;
                const double amp = dir * mag(rng) * std::min(amp_margin, slope_cap);
                for (std::size_t t = 0; t < agree_from; ++t) {
                    const double env = std::sin(M_PI * static_cast<double>(t) /
                                                static_cast<double>(agree_from));
                    v.samples[t][ch] += amp * env * env;
                }
            }
            if (v.samples == base_signal.samples) continue;  // w == len leaves nothing to perturb
            const auto traj_v = run_liquid(graph, v, horizon, params);
            const std::vector<double> out_v = apply_filters(bank, traj_v);
            double sq = 0.0;
            for (std::size_t c = 0; c < out_v.size(); ++c) {
                const double d = out_v[c] - base_out[c];
                sq += d * d;
            }
            divergences.push_back(std::sqrt(sq));
        }
        double mean = 0.0;
        if (divergences.empty()) {
            report.mean_divergence.push_back(0.0);
            report.spread.push_back(0.0);
            continue;
        }
        for (double d : divergences) mean += d;
        mean /= static_cast<double>(divergences.size());
        double var = 0.0;
        for (double d : divergences) var += (d - mean) * (d - mean);
        report.mean_divergence.push_back(mean);
        report.spread.push_back(std::sqrt(var / static_cast<double>(divergences.size())));
    }

    // Certification: the curve must be nonincreasing and show real decay.
    bool monotone = true;
    for (std::size_t i = 1; i < report.mean_divergence.size(); ++i)
        if (report.mean_divergence[i] >
            report.mean_divergence[i - 1] * (1.0 + 1e-9) + 1e-12)
            monotone = false;
    const double first = report.mean_divergence.front();
    const double last = report.mean_divergence.back();
    if (first <= 0.0) {
        report.certified = false;
        report.reason = "fading memory not certified: no divergence produced at the shortest "
                        "window";
    } else if (!monotone) {
        report.certified = false;
        report.reason = "fading memory not certified: divergence is not nonincreasing across "
                        "windows";
    } else if (last > 0.5 * first) {
        report.certified = false;
        report.reason = "fading memory not certified: divergence decays by less than half "
                        "across the window range";
    } else {
        report.certified = true;
        report.reason = "certified: divergence nonincreasing and decayed to " +
                        std::to_string(last / first) + " of its initial value";
    }
    return report;
}

std::string graph_to_json(const ReservoirGraph& g) {
    json j;
    j["n"] = g.n;
    j["m"] = g.m;
    j["seed"] = g.seed;
    j["field_scale"] = g.field_scale;
    j["connectivity_fraction"] = g.connectivity_fraction;
    auto matrix_rows = [](const Eigen::MatrixXd& m) {
        std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
        return rows;
    };
    j["couplings"] = matrix_rows(g.couplings);
    j["input_weights"] = matrix_rows(g.input_weights);
    return j.dump(2);
}

ReservoirGraph graph_from_json(const std::string& text) {
    json j = json::parse(text);
    ReservoirGraph g;
    g.n = j.at("n").get<int>();
    g.m = j.at("m").get<int>();
    g.seed = j.at("seed").get<std::uint64_t>();
    g.field_scale = j.at("field_scale").get<double>();
    g.connectivity_fraction = j.at("connectivity_fraction").get<double>();
    const auto load = [](const json& rows) {
        Eigen::MatrixXd m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c].get<double>();
        return m;
    };
    g.couplings = load(j.at("couplings"));
    g.input_weights = load(j.at("input_weights"));
    if (g.couplings.rows() != g.n || g.couplings.cols() != g.n ||
        g.input_weights.rows() != g.n || g.input_weights.cols() != g.m)
        throw IngestError("graph_from_json: matrix shapes disagree with n/m");
    return g;
}

void write_signal_csv(std::ostream& out, const InputSignal& u) {
    out << "t";
    for (int ch = 0; ch < u.channels; ++ch) out << ",ch" << ch;
    out << "\n";
    char buf[32];
    for (std::size_t t = 0; t < u.samples.size(); ++t) {
        std::snprintf(buf, sizeof buf, "%.17g", t * u.dt);
        out << buf;
        for (int ch = 0; ch < u.channels; ++ch) {
            std::snprintf(buf, sizeof buf, "%.17g", u.samples[t][ch]);
            out << ',' << buf;
        }
        out << "\n";
    }
}

InputSignal read_signal_csv(std::istream& in, double bound, double lipschitz,
                            double dt_fallback) {
    InputSignal u;
    u.bound = bound;
    u.lipschitz = lipschitz;
    std::string line;
    std::vector<double> times;
    bool header_seen = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line.rfind("t,", 0) != 0)
                throw IngestError("signal CSV: expected header starting with 't,'");
            header_seen = true;
            u.channels = static_cast<int>(std::count(line.begin(), line.end(), ','));
            continue;
        }
        std::istringstream ls(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ls, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw IngestError("signal CSV line " + std::to_string(line_no) +
                                  ": bad number '" + cell + "'");
            }
        }
        if (static_cast<int>(row.size()) != u.channels + 1)
            throw IngestError("signal CSV line " + std::to_string(line_no) +
                              ": expected " + std::to_string(u.channels + 1) + " fields");
        times.push_back(row.front());
        u.samples.emplace_back(row.begin() + 1, row.end());
    }
    if (!header_seen || u.samples.empty()) throw IngestError("signal CSV: no data rows");
    u.dt = times.size() > 1 ? times[1] - times[0] : dt_fallback;
    if (!(u.dt > 0.0)) throw IngestError("signal CSV: nonpositive time step");
    return u;
}

void write_trajectory_csv(std::ostream& out, const std::vector<LiquidState>& traj) {
    if (traj.empty()) return;
    out << "t";
    for (std::size_t i = 0; i < traj.front().node_expectations.size(); ++i) out << ",z" << i;
    out << "\n";
    char buf[32];
    for (const LiquidState& s : traj) {
        std::snprintf(buf, sizeof buf, "%.17g", s.t);
        out << buf;
        for (double z : s.node_expectations) {
            std::snprintf(buf, sizeof buf, "%.17g", z);
            out << ',' << buf;
        }
        out << "\n";
    }
}

}  // namespace qlsm
