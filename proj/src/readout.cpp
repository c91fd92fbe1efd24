#include "qlsm/readout.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <nlohmann/json.hpp>

#include "qlsm/errors.hpp"

namespace qlsm {

namespace {

void check_data(const TrainingSet& data) {
    if (data.inputs.size() != data.targets.size())
        throw SizeError("training set: inputs and targets differ in length");
    if (data.inputs.empty()) throw ConfigError("training set: empty");
    const std::size_t d = data.inputs.front().size();
    for (const auto& row : data.inputs)
        if (row.size() != d) throw SizeError("training set: ragged input rows");
}

}  // namespace

SplitTrainingSet split_by_time(const TrainingSet& data, double train_fraction) {
    check_data(data);
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw ConfigError("split_by_time: train fraction must be in (0, 1)");
    const std::size_t n_train =
        std::max<std::size_t>(1, static_cast<std::size_t>(data.inputs.size() * train_fraction));
    if (n_train >= data.inputs.size())
        throw ConfigError("split_by_time: split leaves no test rows");
    SplitTrainingSet out;
    out.train.inputs.assign(data.inputs.begin(), data.inputs.begin() + n_train);
    out.train.targets.assign(data.targets.begin(), data.targets.begin() + n_train);
    out.test.inputs.assign(data.inputs.begin() + n_train, data.inputs.end());
    out.test.targets.assign(data.targets.begin() + n_train, data.targets.end());
    return out;
}

ReadoutModel train_readout(const TrainingSet& data, double regularization) {
    check_data(data);
    if (data.inputs.size() < 2) throw ConfigError("train_readout: need at least 2 examples");
    if (regularization < 0.0)
        throw ConfigError("train_readout: regularization must be >= 0");

    const Eigen::Index n = static_cast<Eigen::Index>(data.inputs.size());
    const Eigen::Index d = static_cast<Eigen::Index>(data.inputs.front().size());
    Eigen::MatrixXd x(n, d);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        y(i) = data.targets[i];
        for (Eigen::Index j = 0; j < d; ++j) x(i, j) = data.inputs[i][j];
    }

    // Center so the intercept absorbs the means and stays unpenalized.
    const Eigen::RowVectorXd x_mean = x.colwise().mean();
    const double y_mean = y.mean();
    x.rowwise() -= x_mean;
    y.array() -= y_mean;

    Eigen::MatrixXd normal = x.transpose() * x;
    normal.diagonal().array() += regularization;

    if (regularization == 0.0) {
        const Eigen::FullPivLU<Eigen::MatrixXd> lu(normal);
        if (!lu.isInvertible())
            throw SolverError("train_readout: normal system is singular; rerun with "
                              "regularization > 0");
    }

    const Eigen::VectorXd beta = normal.ldlt().solve(x.transpose() * y);

    ReadoutModel model;
    model.regularization = regularization;
    model.coefficients.assign(beta.data(), beta.data() + beta.size());
    model.intercept = y_mean - x_mean.dot(beta);
    return model;
}

double predict(const ReadoutModel& model, const std::vector<double>& filter_output) {
    if (filter_output.size() != model.coefficients.size())
        throw SizeError("predict: input has " + std::to_string(filter_output.size()) +
                        " components, model expects " +
                        std::to_string(model.coefficients.size()));
    double acc = model.intercept;
    for (std::size_t i = 0; i < filter_output.size(); ++i)
        acc += model.coefficients[i] * filter_output[i];
    return acc;
}

ApproximationReport approximation_report(const ReadoutModel& model, const TrainingSet& test,
                                         double rho) {
    check_data(test);
    ApproximationReport report;
    report.rho = rho;
    report.num_test_points = test.inputs.size();
    for (std::size_t i = 0; i < test.inputs.size(); ++i) {
        const double err = std::abs(predict(model, test.inputs[i]) - test.targets[i]);
        if (err >= report.sup_error) {
            report.sup_error = err;
            report.witness_index = i;
        }
    }
    report.passed = report.sup_error <= rho;
    return report;
}

double rmse(const ReadoutModel& model, const TrainingSet& data) {
    check_data(data);
    double sq = 0.0;
    for (std::size_t i = 0; i < data.inputs.size(); ++i) {
        const double e = predict(model, data.inputs[i]) - data.targets[i];
        sq += e * e;
    }
    return std::sqrt(sq / static_cast<double>(data.inputs.size()));
}

double constant_mean_baseline_rmse(const TrainingSet& train, const TrainingSet& eval) {
    if (train.targets.empty() || eval.targets.empty())
        throw ConfigError("baseline: empty split");
    double mean = 0.0;
    for (double t : train.targets) mean += t;
    mean /= static_cast<double>(train.targets.size());
    double sq = 0.0;
    for (double t : eval.targets) sq += (t - mean) * (t - mean);
    return std::sqrt(sq / static_cast<double>(eval.targets.size()));
}

std::string model_to_json(const ReadoutModel& model) {
    nlohmann::json j;
    j["coefficients"] = model.coefficients;
    j["intercept"] = model.intercept;
    j["regularization"] = model.regularization;
    j["filter_bank_hash"] = model.filter_bank_hash;
    return j.dump(2);
}

ReadoutModel model_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    ReadoutModel model;
    model.coefficients = j.at("coefficients").get<std::vector<double>>();
    model.intercept = j.at("intercept").get<double>();
    model.regularization = j.at("regularization").get<double>();
    model.filter_bank_hash = j.at("filter_bank_hash").get<std::uint64_t>();
    return model;
}

}  // namespace qlsm
