#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qlsm {

/// Affine map on filter outputs: prediction = intercept + coefficients . x.
struct ReadoutModel {
    std::vector<double> coefficients;
    double intercept = 0.0;
    double regularization = 0.0;
    std::uint64_t filter_bank_hash = 0;
};

struct TrainingSet {
    std::vector<std::vector<double>> inputs;  // filter-output vectors
    std::vector<double> targets;
};

/// Chronological split; the first `train_fraction` of the rows train, the
/// rest test. No shuffling, so no information flows backward in time.
struct SplitTrainingSet {
    TrainingSet train;
    TrainingSet test;
};

SplitTrainingSet split_by_time(const TrainingSet& data, double train_fraction = 0.8);

/// Ridge regression through the normal equations. The intercept is not
/// penalized (data are centered first). With zero regularization a singular
/// normal system is refused rather than silently pseudo-solved.
ReadoutModel train_readout(const TrainingSet& data, double regularization = 1e-6);

double predict(const ReadoutModel& model, const std::vector<double>& filter_output);

struct ApproximationReport {
    double sup_error = 0.0;
    double rho = 0.0;
    bool passed = false;
    std::size_t witness_index = 0;  // test point attaining the sup error
    std::size_t num_test_points = 0;
};

/// Sup-norm error of the model against target values over a test set,
/// checked against the tolerance rho. The verdict speaks only for the
/// points supplied.
ApproximationReport approximation_report(const ReadoutModel& model, const TrainingSet& test,
                                         double rho);

/// Root-mean-square error of the model over a set.
double rmse(const ReadoutModel& model, const TrainingSet& data);

/// RMSE of the best constant predictor fitted on `train`, evaluated on
/// `eval`. The baseline every trained readout must beat.
double constant_mean_baseline_rmse(const TrainingSet& train, const TrainingSet& eval);

std::string model_to_json(const ReadoutModel& model);
ReadoutModel model_from_json(const std::string& text);

}  // namespace qlsm
