#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace driftcast::models {

/// Weights of a one-hidden-layer feedforward regressor with relu activation.
/// weights_in is row-major hidden_dim x input_dim.
struct MlpParameters {
    std::size_t input_dim = 0;
    std::size_t hidden_dim = 128;
    std::vector<double> weights_in;
    std::vector<double> bias_in;
    std::vector<double> weights_out;
    double bias_out = 0.0;
    double dropout_rate = 0.5;

    bool consistent() const;
};

enum class TargetScaling { None, Standardize };

struct TrainingConfig {
    double learning_rate = 1e-3;
    int epochs = 20;
    int batch_size = 256;
    std::uint64_t seed = 0;
    TargetScaling target_scaling = TargetScaling::Standardize;
    bool standardize_features = true;
    std::size_t hidden_dim = 128;
    double dropout_rate = 0.5;
};

struct TrainingExample {
    std::vector<double> features;
    double target = 0.0;
};

/// Inference-time forward pass: bias_out + weights_out . relu(W x + b).
/// Dropout is never applied here; predictions are deterministic.
double mlp_forward(const MlpParameters& params, std::span<const double> x);

struct MlpGradients {
    std::vector<double> weights_in;
    std::vector<double> bias_in;
    std::vector<double> weights_out;
    double bias_out = 0.0;
    double prediction = 0.0;
};

/**
 * Analytic gradient of the squared loss (forward(x) - target)^2 with
 * respect to every parameter. `hidden_scale`, when nonempty, multiplies
 * each hidden activation (the inverted-dropout mask during training);
 * the returned prediction is the scaled forward value in that case.
 */
MlpGradients mlp_loss_gradients(const MlpParameters& params, std::span<const double> x,
                                double target, std::span<const double> hidden_scale = {});

/// Seeded He-style uniform initialization for the hidden layer,
/// U(-sqrt(6/fan_in), +sqrt(6/fan_in)); zero biases and a zero output
/// layer, so an untrained network predicts the (centered) training mean.
MlpParameters he_uniform_init(std::size_t input_dim, std::size_t hidden_dim,
                              double dropout_rate, std::uint64_t seed);

/**
 * Seeded mini-batch gradient descent on squared error with inverted dropout
 * on the hidden layer. Targets are fitted exactly as given; use
 * train_regressor for the scaled demand model. Identical
 * (seed, dataset, config) yields bit-identical parameters.
 */
MlpParameters mlp_train(const std::vector<TrainingExample>& dataset, const TrainingConfig& config);
MlpParameters mlp_train(const std::vector<TrainingExample>& dataset, const TrainingConfig& config,
                        MlpParameters initial);

/// Per-dimension affine standardization fitted on training data.
/// Dimensions with zero spread pass through centered only.
struct FeatureScaler {
    std::vector<double> mean;
    std::vector<double> stddev;  // 1.0 where the raw spread is zero

    void fit(const std::vector<TrainingExample>& dataset);
    std::vector<double> apply(std::span<const double> x) const;
    bool identity() const { return mean.empty(); }
};

struct TargetScaler {
    double mean = 0.0;
    double stddev = 1.0;

    double to_model(double y) const { return (y - mean) / stddev; }
    double from_model(double y) const { return y * stddev + mean; }
};

/**
 * The trained demand forecaster: network weights plus the feature/target
 * standardization fitted on the training window. Predictions are clamped
 * at zero (demand is a count).
 */
struct DemandRegressor {
    MlpParameters params;
    FeatureScaler features;
    TargetScaler target;
    std::uint64_t trained_seed = 0;

    double predict(std::span<const double> raw_features) const;

    std::string to_json() const;  // lossless round trip
    static DemandRegressor from_json(const std::string& text);
};

DemandRegressor train_regressor(const std::vector<TrainingExample>& dataset,
                                const TrainingConfig& config);

} // namespace driftcast::models
