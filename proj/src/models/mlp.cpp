#include "driftcast/models/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <json.hpp>

#include "driftcast/errors.hpp"

namespace driftcast::models {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw ContractViolation(msg);
}

double forward_scaled(const MlpParameters& p, std::span<const double> x,
                      std::span<const double> hidden_scale) {
    double out = p.bias_out;
    for (std::size_t j = 0; j < p.hidden_dim; ++j) {
        const double* row = p.weights_in.data() + j * p.input_dim;
        double pre = p.bias_in[j];
        for (std::size_t i = 0; i < p.input_dim; ++i) {
            pre += row[i] * x[i];
        }
        if (pre > 0.0) {
            double h = pre;
            if (!hidden_scale.empty()) h *= hidden_scale[j];
            out += p.weights_out[j] * h;
        }
    }
    return out;
}

void accumulate_gradients(const MlpParameters& p, std::span<const double> x, double target,
                          std::span<const double> hidden_scale, MlpGradients& g) {
    std::vector<double> pre(p.hidden_dim);
    double out = p.bias_out;
    for (std::size_t j = 0; j < p.hidden_dim; ++j) {
        const double* row = p.weights_in.data() + j * p.input_dim;
        double a = p.bias_in[j];
        for (std::size_t i = 0; i < p.input_dim; ++i) {
            a += row[i] * x[i];
        }
        pre[j] = a;
        if (a > 0.0) {
            double h = a;
            if (!hidden_scale.empty()) h *= hidden_scale[j];
            out += p.weights_out[j] * h;
        }
    }

    const double dloss = 2.0 * (out - target);
    g.bias_out += dloss;
    for (std::size_t j = 0; j < p.hidden_dim; ++j) {
        if (pre[j] <= 0.0) continue;
        const double scale = hidden_scale.empty() ? 1.0 : hidden_scale[j];
        g.weights_out[j] += dloss * pre[j] * scale;
        const double dpre = dloss * p.weights_out[j] * scale;
        g.bias_in[j] += dpre;
        double* grow = g.weights_in.data() + j * p.input_dim;
        for (std::size_t i = 0; i < p.input_dim; ++i) {
            grow[i] += dpre * x[i];
        }
    }
    g.prediction = out;
}

void validate_config(const TrainingConfig& c) {
    if (c.learning_rate <= 0.0) throw ContractViolation("learning_rate must be > 0");
    if (c.epochs < 1) throw ContractViolation("epochs must be >= 1");
    if (c.batch_size < 1) throw ContractViolation("batch_size must be >= 1");
    if (c.dropout_rate < 0.0 || c.dropout_rate >= 1.0) {
        throw ContractViolation("dropout_rate must be in [0, 1)");
    }
}

} // namespace

bool MlpParameters::consistent() const {
    return input_dim > 0 && hidden_dim > 0 &&
           weights_in.size() == hidden_dim * input_dim &&
           bias_in.size() == hidden_dim && weights_out.size() == hidden_dim &&
           dropout_rate >= 0.0 && dropout_rate < 1.0;
}

double mlp_forward(const MlpParameters& params, std::span<const double> x) {
    require(params.consistent(), "mlp_forward: inconsistent parameters");
    require(x.size() == params.input_dim, "mlp_forward: input dimension mismatch");
    return forward_scaled(params, x, {});
}

MlpGradients mlp_loss_gradients(const MlpParameters& params, std::span<const double> x,
                                double target, std::span<const double> hidden_scale) {
    require(params.consistent(), "mlp_loss_gradients: inconsistent parameters");
    require(x.size() == params.input_dim, "mlp_loss_gradients: input dimension mismatch");
    require(hidden_scale.empty() || hidden_scale.size() == params.hidden_dim,
            "mlp_loss_gradients: hidden_scale dimension mismatch");
    MlpGradients g;
    g.weights_in.assign(params.weights_in.size(), 0.0);
    g.bias_in.assign(params.hidden_dim, 0.0);
    g.weights_out.assign(params.hidden_dim, 0.0);
    accumulate_gradients(params, x, target, hidden_scale, g);
    return g;
}

MlpParameters he_uniform_init(std::size_t input_dim, std::size_t hidden_dim,
                              double dropout_rate, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    MlpParameters p;
    p.input_dim = input_dim;
    p.hidden_dim = hidden_dim;
    p.dropout_rate = dropout_rate;
    p.weights_in.resize(hidden_dim * input_dim);
    p.bias_in.assign(hidden_dim, 0.0);
    p.weights_out.resize(hidden_dim);

    const double lim_in = std::sqrt(6.0 / static_cast<double>(input_dim));
    std::uniform_real_distribution<double> din(-lim_in, lim_in);
    for (auto& w : p.weights_in) w = din(rng);

    // Output layer starts at zero: a network whose targets are already
    // centered then predicts the training mean from step 0, and a constant
    // stream is fitted exactly without a single gradient step.
    std::fill(p.weights_out.begin(), p.weights_out.end(), 0.0);
    return p;
}

MlpParameters mlp_train(const std::vector<TrainingExample>& dataset, const TrainingConfig& config) {
    require(!dataset.empty(), "mlp_train: empty dataset");
    MlpParameters initial = he_uniform_init(dataset.front().features.size(), config.hidden_dim,
                                            config.dropout_rate, config.seed);
    return mlp_train(dataset, config, std::move(initial));
}

MlpParameters mlp_train(const std::vector<TrainingExample>& dataset, const TrainingConfig& config,
                        MlpParameters initial) {
    require(!dataset.empty(), "mlp_train: empty dataset");
    validate_config(config);
    require(initial.consistent(), "mlp_train: inconsistent initial parameters");
    require(initial.input_dim == dataset.front().features.size(),
            "mlp_train: dataset/parameter dimension mismatch");
    for (const auto& ex : dataset) {
        require(ex.features.size() == initial.input_dim, "mlp_train: ragged dataset");
    }

    MlpParameters p = std::move(initial);
    // Dropout masks and the shuffle share one seeded stream; the init in the
    // two-argument overload uses its own, so warm starts stay reproducible.
    std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
    const double rate = p.dropout_rate;
    const double keep = 1.0 - rate;
    std::bernoulli_distribution keep_draw(keep);

    std::vector<std::size_t> order(dataset.size());
    std::iota(order.begin(), order.end(), std::size_t{0});

    MlpGradients batch_grad;
    batch_grad.weights_in.assign(p.weights_in.size(), 0.0);
    batch_grad.bias_in.assign(p.hidden_dim, 0.0);
    batch_grad.weights_out.assign(p.hidden_dim, 0.0);
    std::vector<double> scale(p.hidden_dim, 1.0);

    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t begin = 0; begin < order.size(); begin += static_cast<std::size_t>(config.batch_size)) {
            const std::size_t end = std::min(order.size(), begin + static_cast<std::size_t>(config.batch_size));
            std::fill(batch_grad.weights_in.begin(), batch_grad.weights_in.end(), 0.0);
            std::fill(batch_grad.bias_in.begin(), batch_grad.bias_in.end(), 0.0);
            std::fill(batch_grad.weights_out.begin(), batch_grad.weights_out.end(), 0.0);
            batch_grad.bias_out = 0.0;

            for (std::size_t k = begin; k < end; ++k) {
                const auto& ex = dataset[order[k]];
                if (rate > 0.0) {
                    for (std::size_t j = 0; j < p.hidden_dim; ++j) {
                        scale[j] = keep_draw(rng) ? 1.0 / keep : 0.0;
                    }
                    accumulate_gradients(p, ex.features, ex.target, scale, batch_grad);
                } else {
                    accumulate_gradients(p, ex.features, ex.target, {}, batch_grad);
                }
            }

            const double step = config.learning_rate / static_cast<double>(end - begin);
            for (std::size_t i = 0; i < p.weights_in.size(); ++i) {
                p.weights_in[i] -= step * batch_grad.weights_in[i];
            }
            for (std::size_t j = 0; j < p.hidden_dim; ++j) {
                p.bias_in[j] -= step * batch_grad.bias_in[j];
                p.weights_out[j] -= step * batch_grad.weights_out[j];
            }
            p.bias_out -= step * batch_grad.bias_out;
        }
    }
    return p;
}

void FeatureScaler::fit(const std::vector<TrainingExample>& dataset) {
    require(!dataset.empty(), "FeatureScaler: empty dataset");
    const std::size_t dim = dataset.front().features.size();
    mean.assign(dim, 0.0);
    stddev.assign(dim, 1.0);
    for (const auto& ex : dataset) {
        for (std::size_t i = 0; i < dim; ++i) mean[i] += ex.features[i];
    }
    for (auto& m : mean) m /= static_cast<double>(dataset.size());
    std::vector<double> var(dim, 0.0);
    for (const auto& ex : dataset) {
        for (std::size_t i = 0; i < dim; ++i) {
            const double c = ex.features[i] - mean[i];
            var[i] += c * c;
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        const double v = var[i] / static_cast<double>(dataset.size());
        stddev[i] = v > 0.0 ? std::sqrt(v) : 1.0;
    }
}

std::vector<double> FeatureScaler::apply(std::span<const double> x) const {
    if (identity()) return {x.begin(), x.end()};
    require(x.size() == mean.size(), "FeatureScaler: dimension mismatch");
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = (x[i] - mean[i]) / stddev[i];
    }
    return out;
}

double DemandRegressor::predict(std::span<const double> raw_features) const {
    const std::vector<double> x = features.apply(raw_features);
    const double y = target.from_model(mlp_forward(params, x));
    return y < 0.0 ? 0.0 : y;
}

DemandRegressor train_regressor(const std::vector<TrainingExample>& dataset,
                                const TrainingConfig& config) {
    require(!dataset.empty(), "train_regressor: empty dataset");
    validate_config(config);

    DemandRegressor model;
    model.trained_seed = config.seed;
    if (config.standardize_features) {
        model.features.fit(dataset);
    }
    if (config.target_scaling == TargetScaling::Standardize) {
        double m = 0.0;
        for (const auto& ex : dataset) m += ex.target;
        m /= static_cast<double>(dataset.size());
        double v = 0.0;
        for (const auto& ex : dataset) {
            const double c = ex.target - m;
            v += c * c;
        }
        v /= static_cast<double>(dataset.size());
        model.target.mean = m;
        model.target.stddev = v > 0.0 ? std::sqrt(v) : 1.0;
    }

    std::vector<TrainingExample> scaled(dataset.size());
    for (std::size_t k = 0; k < dataset.size(); ++k) {
        scaled[k].features = model.features.apply(dataset[k].features);
        scaled[k].target = model.target.to_model(dataset[k].target);
    }
    model.params = mlp_train(scaled, config);
    return model;
}

std::string DemandRegressor::to_json() const {
    nlohmann::json j;
    j["format"] = "driftcast-mlp";
    j["version"] = 1;
    j["input_dim"] = params.input_dim;
    j["hidden_dim"] = params.hidden_dim;
    j["dropout_rate"] = params.dropout_rate;
    j["seed"] = trained_seed;
    j["weights_in"] = params.weights_in;
    j["bias_in"] = params.bias_in;
    j["weights_out"] = params.weights_out;
    j["bias_out"] = params.bias_out;
    j["feature_mean"] = features.mean;
    j["feature_std"] = features.stddev;
    j["target_mean"] = target.mean;
    j["target_std"] = target.stddev;
    return j.dump(2);
}

DemandRegressor DemandRegressor::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.value("format", "") != std::string("driftcast-mlp")) {
        throw IoError("not a model document");
    }
    DemandRegressor m;
    m.params.input_dim = j.at("input_dim").get<std::size_t>();
    m.params.hidden_dim = j.at("hidden_dim").get<std::size_t>();
    m.params.dropout_rate = j.at("dropout_rate").get<double>();
    m.trained_seed = j.at("seed").get<std::uint64_t>();
    m.params.weights_in = j.at("weights_in").get<std::vector<double>>();
    m.params.bias_in = j.at("bias_in").get<std::vector<double>>();
    m.params.weights_out = j.at("weights_out").get<std::vector<double>>();
    m.params.bias_out = j.at("bias_out").get<double>();
    m.features.mean = j.at("feature_mean").get<std::vector<double>>();
    m.features.stddev = j.at("feature_std").get<std::vector<double>>();
    m.target.mean = j.at("target_mean").get<double>();
    m.target.stddev = j.at("target_std").get<double>();
    if (!m.params.consistent()) {
        throw IoError("model document has inconsistent dimensions");
    }
    return m;
}

} // namespace driftcast::models
