#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "driftcast/errors.hpp"
#include "driftcast/models/features.hpp"
#include "driftcast/models/mlp.hpp"
#include "driftcast/models/naive.hpp"
#include "driftcast/models/retrain.hpp"
#include "driftcast/time.hpp"

using namespace driftcast;
using namespace driftcast::models;

TEST_CASE("cyclical features hit the axis points") {
    const CyclicalFeatures zero = cyclical_features(0, 1);
    CHECK(zero.cos_hour == 1.0);
    CHECK(zero.sin_hour == 0.0);
    CHECK(zero.cos_month == 1.0);
    CHECK(zero.sin_month == 0.0);

    const CyclicalFeatures quarter = cyclical_features(6, 1);
    CHECK(std::abs(quarter.cos_hour) <= 1e-12);
    CHECK(quarter.sin_hour == doctest::Approx(1.0).epsilon(1e-12));

    const CyclicalFeatures half = cyclical_features(12, 1);
    CHECK(half.cos_hour == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(half.sin_hour) <= 1e-12);
}

TEST_CASE("cyclical features lie on the unit circle") {
    for (int hour = 0; hour < 24; ++hour) {
        for (int month = 1; month <= 12; ++month) {
            const CyclicalFeatures f = cyclical_features(hour, month);
            const double hr = f.cos_hour * f.cos_hour + f.sin_hour * f.sin_hour;
            const double mr = f.cos_month * f.cos_month + f.sin_month * f.sin_month;
            CHECK(hr == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(mr == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("cyclical features reject out-of-range input") {
    CHECK_THROWS_AS(cyclical_features(-1, 1), ContractViolation);
    CHECK_THROWS_AS(cyclical_features(24, 1), ContractViolation);
    CHECK_THROWS_AS(cyclical_features(0, 0), ContractViolation);
    CHECK_THROWS_AS(cyclical_features(0, 13), ContractViolation);
}

TEST_CASE("naive forecast returns the last observation") {
    const std::vector<double> tail42{8.0, 15.0, 42.0};
    CHECK(naive_predict(tail42) == 42.0);
    const std::vector<double> single{7.0};
    CHECK(naive_predict(single) == 7.0);
    const std::vector<double> zero_last{3.0, 0.0};
    CHECK(naive_predict(zero_last) == 0.0);
    const std::vector<double> empty;
    CHECK_THROWS_AS(naive_predict(empty), ContractViolation);
}

TEST_CASE("naive forecast is the stream shifted by one step") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 100.0);
    std::vector<double> stream(50);
    for (double& v : stream) v = u(rng);
    for (std::size_t i = 1; i < stream.size(); ++i) {
        CHECK(naive_predict(std::span(stream.data(), i)) == stream[i - 1]);
    }
}

TEST_CASE("feature vector layout and lag placement") {
    // 2015-02-16 was a Monday.
    const HourStamp target = HourStamp::from_calendar(2015, 2, 16, 10);
    CHECK(target.weekday() == 0);
    const std::size_t n = 800;
    std::vector<double> history(n);
    for (std::size_t i = 0; i < n; ++i) history[i] = static_cast<double>(i);

    const FeatureVector fv = build_features(history, target, 3, 20);
    CHECK(fv.dimension() == 20 + 7 + 24 + 4 + 4);
    CHECK(fv.zone_onehot.size() == 20);
    CHECK(fv.zone_onehot[3] == 1.0);
    double zone_sum = 0.0;
    for (double v : fv.zone_onehot) zone_sum += v;
    CHECK(zone_sum == 1.0);

    CHECK(fv.weekday_onehot[0] == 1.0);
    double wd_sum = 0.0;
    for (double v : fv.weekday_onehot) wd_sum += v;
    CHECK(wd_sum == 1.0);

    // Hourly lags run oldest to newest, ending one hour before the target.
    for (std::size_t k = 0; k < 24; ++k) {
        CHECK(fv.hourly_lags[k] == history[n - 24 + k]);
    }
    // Weekly lags start with the most recent week.
    for (std::size_t w = 0; w < 4; ++w) {
        CHECK(fv.weekly_lags[w] == history[n - (w + 1) * 168]);
    }

    const CyclicalFeatures expect = cyclical_features(10, 2);
    CHECK(fv.cyclical.cos_hour == expect.cos_hour);
    CHECK(fv.cyclical.sin_month == expect.sin_month);

    const std::vector<double> flat = fv.flatten();
    CHECK(flat.size() == fv.dimension());
    CHECK(flat[3] == 1.0);            // zone block first
    CHECK(flat[20] == 1.0);           // weekday block next (Monday)
    CHECK(flat[27] == history[n - 24]);
    CHECK(flat[flat.size() - 4] == expect.cos_hour);
}

TEST_CASE("feature builder handles constants and rejects short history") {
    const HourStamp target = HourStamp::from_calendar(2015, 6, 1, 0);
    std::vector<double> constant(kWarmupHours, 9.5);
    const FeatureVector fv = build_features(constant, target, 0, 1);
    for (double v : fv.hourly_lags) CHECK(v == 9.5);
    for (double v : fv.weekly_lags) CHECK(v == 9.5);

    std::vector<double> short_history(kWarmupHours - 1, 1.0);
    CHECK_THROWS_AS(build_features(short_history, target, 0, 1), InsufficientHistory);
    CHECK_THROWS_AS(build_features(constant, target, 2, 1), ContractViolation);
}

TEST_CASE("forward pass on hand-sized networks") {
    MlpParameters p;
    p.input_dim = 2;
    p.hidden_dim = 2;
    p.weights_in = {1.0, -1.0, 0.5, 2.0};
    p.bias_in = {0.0, -1.0};
    p.weights_out = {2.0, 3.0};
    p.bias_out = 0.25;

    // First unit: 1 - 2 = -1, clipped. Second: 0.5 + 4 - 1 = 3.5.
    const std::vector<double> x{1.0, 2.0};
    CHECK(mlp_forward(p, x) == 0.25 + 3.0 * 3.5);

    MlpParameters zero = p;
    zero.weights_in.assign(4, 0.0);
    zero.bias_in.assign(2, 0.0);
    zero.weights_out.assign(2, 0.0);
    zero.bias_out = 0.0;
    CHECK(mlp_forward(zero, x) == 0.0);

    MlpParameters bias_only = zero;
    bias_only.bias_out = -3.75;
    CHECK(mlp_forward(bias_only, x) == -3.75);

    const std::vector<double> wrong{1.0, 2.0, 3.0};
    CHECK_THROWS_AS(mlp_forward(p, wrong), ContractViolation);
}

namespace {

MlpParameters random_params(std::mt19937_64& rng, std::size_t input_dim, std::size_t hidden_dim) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    MlpParameters p;
    p.input_dim = input_dim;
    p.hidden_dim = hidden_dim;
    p.dropout_rate = 0.0;
    p.weights_in.resize(hidden_dim * input_dim);
    p.bias_in.resize(hidden_dim);
    p.weights_out.resize(hidden_dim);
    for (double& w : p.weights_in) w = u(rng);
    for (double& w : p.bias_in) w = u(rng);
    for (double& w : p.weights_out) w = u(rng);
    p.bias_out = u(rng);
    return p;
}

double squared_loss(const MlpParameters& p, const std::vector<double>& x, double target) {
    const double diff = mlp_forward(p, x) - target;
    return diff * diff;
}

// Central finite difference on one flat parameter coordinate.
double fd_gradient(MlpParameters p, std::size_t coord, const std::vector<double>& x,
                   double target) {
    const double h = 1e-5;
    const auto at = [&](MlpParameters& q) -> double& {
        const std::size_t n_in = q.weights_in.size();
        const std::size_t n_bin = q.bias_in.size();
        const std::size_t n_out = q.weights_out.size();
        if (coord < n_in) return q.weights_in[coord];
        if (coord < n_in + n_bin) return q.bias_in[coord - n_in];
        if (coord < n_in + n_bin + n_out) return q.weights_out[coord - n_in - n_bin];
        return q.bias_out;
    };
    at(p) += h;
    const double up = squared_loss(p, x, target);
    at(p) -= 2.0 * h;
    const double down = squared_loss(p, x, target);
    return (up - down) / (2.0 * h);
}

bool relu_inputs_clear_of_kinks(const MlpParameters& p, const std::vector<double>& x) {
    for (std::size_t j = 0; j < p.hidden_dim; ++j) {
        double pre = p.bias_in[j];
        for (std::size_t i = 0; i < p.input_dim; ++i) {
            pre += p.weights_in[j * p.input_dim + i] * x[i];
        }
        if (std::abs(pre) < 1e-3) return false;
    }
    return true;
}

} // namespace

TEST_CASE("analytic gradients match central finite differences on 100 seeded draws") {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const std::size_t input_dim = 5;
    const std::size_t hidden_dim = 7;
    const std::size_t n_params = hidden_dim * input_dim + hidden_dim + hidden_dim + 1;

    int accepted = 0;
    int attempts = 0;
    while (accepted < 100) {
        REQUIRE(++attempts < 2000);
        MlpParameters p = random_params(rng, input_dim, hidden_dim);
        std::vector<double> x(input_dim);
        for (double& v : x) v = 2.0 * u(rng);
        const double target = 3.0 * u(rng);
        // A pre-activation at the relu kink would invalidate the finite
        // difference; redraw instead of loosening tolerances.
        if (!relu_inputs_clear_of_kinks(p, x)) continue;
        ++accepted;

        const MlpGradients g = mlp_loss_gradients(p, x, target);
        std::vector<double> analytic;
        analytic.insert(analytic.end(), g.weights_in.begin(), g.weights_in.end());
        analytic.insert(analytic.end(), g.bias_in.begin(), g.bias_in.end());
        analytic.insert(analytic.end(), g.weights_out.begin(), g.weights_out.end());
        analytic.push_back(g.bias_out);

        for (std::size_t c = 0; c < n_params; ++c) {
            const double fd = fd_gradient(p, c, x, target);
            const double denom = std::max(std::abs(analytic[c]), std::abs(fd));
            if (denom < 1e-7) {
                CHECK(std::abs(analytic[c] - fd) <= 1e-7);
            } else {
                CHECK(std::abs(analytic[c] - fd) / denom <= 1e-4);
            }
        }
    }
    CHECK(accepted == 100);
}

TEST_CASE("gradient prediction field matches the forward pass") {
    std::mt19937_64 rng(31);
    const MlpParameters p = random_params(rng, 4, 6);
    const std::vector<double> x{0.4, -0.8, 1.2, 0.1};
    const MlpGradients g = mlp_loss_gradients(p, x, 2.0);
    CHECK(g.prediction == mlp_forward(p, x));
}

TEST_CASE("relu network is locally linear away from kinks") {
    std::mt19937_64 rng(32);
    const MlpParameters p = random_params(rng, 3, 5);
    const std::vector<double> x{0.5, -0.3, 0.9};
    REQUIRE(relu_inputs_clear_of_kinks(p, x));
    const std::vector<double> v{0.01, 0.02, -0.01};
    const auto shifted = [&](double eps) {
        std::vector<double> y(x);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += eps * v[i];
        return mlp_forward(p, y);
    };
    const double f0 = shifted(0.0);
    const double f1 = shifted(1.0);
    const double fhalf = shifted(0.5);
    CHECK(fhalf == doctest::Approx((f0 + f1) / 2.0).epsilon(1e-12));
}

TEST_CASE("initialization is seeded, bounded, and zero on the output path") {
    const MlpParameters a = he_uniform_init(10, 16, 0.5, 99);
    const MlpParameters b = he_uniform_init(10, 16, 0.5, 99);
    const MlpParameters c = he_uniform_init(10, 16, 0.5, 100);
    CHECK(a.weights_in == b.weights_in);
    CHECK(a.weights_in != c.weights_in);

    const double limit = std::sqrt(6.0 / 10.0);
    for (double w : a.weights_in) {
        CHECK(std::abs(w) <= limit);
    }
    for (double v : a.bias_in) CHECK(v == 0.0);
    for (double v : a.weights_out) CHECK(v == 0.0);
    CHECK(a.bias_out == 0.0);
    CHECK(a.consistent());
}

TEST_CASE("training is bit-deterministic per seed") {
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<TrainingExample> dataset(50);
    for (auto& ex : dataset) {
        ex.features.resize(6);
        for (double& f : ex.features) f = u(rng);
        ex.target = 2.0 * u(rng) + 1.0;
    }
    TrainingConfig config;
    config.epochs = 5;
    config.batch_size = 16;
    config.seed = 9;
    config.hidden_dim = 8;

    const MlpParameters first = mlp_train(dataset, config);
    const MlpParameters second = mlp_train(dataset, config);
    CHECK(first.weights_in == second.weights_in);
    CHECK(first.bias_in == second.bias_in);
    CHECK(first.weights_out == second.weights_out);
    CHECK(first.bias_out == second.bias_out);

    config.seed = 10;
    const MlpParameters other = mlp_train(dataset, config);
    CHECK(first.weights_in != other.weights_in);

    CHECK_THROWS_AS(mlp_train({}, config), ContractViolation);
}

TEST_CASE("all-zero targets keep the zero output path untouched") {
    std::mt19937_64 rng(45);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<TrainingExample> dataset(40);
    for (auto& ex : dataset) {
        ex.features.resize(5);
        for (double& f : ex.features) f = u(rng);
        ex.target = 0.0;
    }
    TrainingConfig config;
    config.epochs = 10;
    config.batch_size = 8;
    config.seed = 3;
    config.hidden_dim = 6;

    // The zero output layer already fits target 0 exactly, so every
    // gradient vanishes and training is the identity.
    const MlpParameters trained = mlp_train(dataset, config);
    const MlpParameters initial = he_uniform_init(5, 6, config.dropout_rate, config.seed);
    CHECK(trained.weights_in == initial.weights_in);
    CHECK(trained.bias_in == initial.bias_in);
    CHECK(trained.weights_out == initial.weights_out);
    CHECK(trained.bias_out == 0.0);
    for (const auto& ex : dataset) {
        CHECK(mlp_forward(trained, ex.features) == 0.0);
    }
}

TEST_CASE("a repeated single example is fitted to high accuracy") {
    TrainingExample ex;
    ex.features = {0.5, -0.2, 1.0, 0.3};
    ex.target = 3.0;
    std::vector<TrainingExample> dataset(30, ex);

    TrainingConfig config;
    config.learning_rate = 0.05;
    config.epochs = 500;
    config.batch_size = 8;
    config.seed = 5;
    config.hidden_dim = 16;
    config.dropout_rate = 0.0;

    const MlpParameters p = mlp_train(dataset, config);
    CHECK(std::abs(mlp_forward(p, ex.features) - 3.0) < 1e-2);
}

TEST_CASE("demand regressor clamps negative outputs and round-trips through JSON") {
    DemandRegressor neg;
    neg.params.input_dim = 1;
    neg.params.hidden_dim = 1;
    neg.params.weights_in = {0.0};
    neg.params.bias_in = {0.0};
    neg.params.weights_out = {0.0};
    neg.params.bias_out = -5.0;
    const std::vector<double> probe{2.0};
    CHECK(neg.predict(probe) == 0.0);

    std::mt19937_64 rng(46);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<TrainingExample> dataset(60);
    for (auto& ex : dataset) {
        ex.features.resize(4);
        for (double& f : ex.features) f = u(rng);
        ex.target = 20.0 + 10.0 * u(rng);
    }
    TrainingConfig config;
    config.epochs = 8;
    config.batch_size = 16;
    config.seed = 77;
    config.hidden_dim = 8;
    const DemandRegressor model = train_regressor(dataset, config);

    const DemandRegressor copy = DemandRegressor::from_json(model.to_json());
    CHECK(copy.params.weights_in == model.params.weights_in);
    CHECK(copy.params.bias_in == model.params.bias_in);
    CHECK(copy.params.weights_out == model.params.weights_out);
    CHECK(copy.params.bias_out == model.params.bias_out);
    CHECK(copy.features.mean == model.features.mean);
    CHECK(copy.features.stddev == model.features.stddev);
    CHECK(copy.target.mean == model.target.mean);
    CHECK(copy.target.stddev == model.target.stddev);
    CHECK(copy.trained_seed == model.trained_seed);

    const std::vector<double> sample = dataset.front().features;
    CHECK(copy.predict(sample) == model.predict(sample));
    CHECK(model.predict(sample) >= 0.0);

    CHECK_THROWS_AS(DemandRegressor::from_json("{\"format\":\"bogus\"}"), IoError);
}

TEST_CASE("retraining schedule slides an inclusive year window") {
    const auto plan = yearly_retrain_plan(2012, 2013, 3);
    REQUIRE(plan.size() == 2);
    CHECK(plan[0] == RetrainPlanEntry{2009, 2011, 2012});
    CHECK(plan[1] == RetrainPlanEntry{2010, 2012, 2013});

    const auto minimal = yearly_retrain_plan(2015, 2015, 1);
    REQUIRE(minimal.size() == 1);
    CHECK(minimal[0] == RetrainPlanEntry{2014, 2014, 2015});

    CHECK_THROWS_AS(yearly_retrain_plan(2015, 2014, 3), ContractViolation);
    CHECK_THROWS_AS(yearly_retrain_plan(2015, 2015, 0), ContractViolation);
}
