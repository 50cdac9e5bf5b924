#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <deque>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "driftcast/errors.hpp"
#include "driftcast/strategies/eia.hpp"
#include "driftcast/strategies/ensemble.hpp"
#include "driftcast/strategies/error_trace.hpp"

using namespace driftcast;
using namespace driftcast::strategies;

namespace {

// From-scratch normalized EWMA over a window, oldest first. Kept separate
// from ErrorTrace so coherence checks compare two implementations.
double windowed_ewma(const std::deque<double>& window, double alpha) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < window.size(); ++k) {
        const double w = std::pow(1.0 - alpha, static_cast<double>(window.size() - 1 - k));
        num += w * window[k];
        den += w;
    }
    return num / den;
}

ErrorTrace trace_of(std::initializer_list<double> errors, std::size_t window = 6) {
    ErrorTrace t(window);
    for (double e : errors) t.update(e);
    return t;
}

} // namespace

TEST_CASE("error trace basics") {
    ErrorTrace t(6);
    CHECK(t.empty());
    CHECK(t.capacity() == 6);
    CHECK(t.alpha() == doctest::Approx(2.0 / 7.0).epsilon(1e-15));
    CHECK_THROWS_AS(t.ewma(), ContractViolation);

    t.update(4.5);
    CHECK(t.ewma() == 4.5);
    CHECK(t.size() == 1);

    for (int i = 0; i < 10; ++i) t.update(2.25);
    CHECK(t.ewma() == doctest::Approx(2.25).epsilon(1e-15));

    CHECK_THROWS_AS(t.update(-0.1), ContractViolation);
    CHECK_THROWS_AS(t.update(std::nan("")), ContractViolation);
    CHECK_THROWS_AS(t.update(std::numeric_limits<double>::infinity()), ContractViolation);

    t.clear();
    CHECK(t.empty());
    CHECK_THROWS_AS(ErrorTrace(0), ContractViolation);
    CHECK_THROWS_AS(ErrorTrace(6, 0.0), ContractViolation);
    CHECK_THROWS_AS(ErrorTrace(6, 1.5), ContractViolation);
}

TEST_CASE("error trace matches a brute-force weighted average") {
    ErrorTrace t(6);
    std::deque<double> window;
    for (double e : {1.0, 2.0, 3.0, 4.0, 5.0, 6.0}) {
        t.update(e);
        window.push_back(e);
    }
    CHECK(t.ewma() == doctest::Approx(windowed_ewma(window, 2.0 / 7.0)).epsilon(1e-12));

    // Heavier weight on recent values: above the plain mean for a rising window.
    CHECK(t.ewma() > 3.5);
}

TEST_CASE("error trace cache stays coherent under churn") {
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> u(0.0, 20.0);
    ErrorTrace t(6);
    std::deque<double> window;
    for (int i = 0; i < 300; ++i) {
        const double e = u(rng);
        t.update(e);
        window.push_back(e);
        if (window.size() > 6) window.pop_front();

        CHECK(t.size() == window.size());
        const std::vector<double> contents = t.contents();
        REQUIRE(contents.size() == window.size());
        for (std::size_t k = 0; k < window.size(); ++k) {
            CHECK(contents[k] == window[k]);
        }
        CHECK(t.ewma() == doctest::Approx(windowed_ewma(window, t.alpha())).epsilon(1e-12));
    }
}

TEST_CASE("model selection prefers the lower error curve, ties to the network") {
    CHECK(eia_select(trace_of({5.0}), trace_of({3.0})) == ModelKind::Complex);
    CHECK(eia_select(trace_of({2.0}), trace_of({3.0})) == ModelKind::Simple);
    CHECK(eia_select(trace_of({3.0}), trace_of({3.0})) == ModelKind::Complex);
    CHECK_THROWS_AS(eia_select(ErrorTrace(6), trace_of({1.0})), ContractViolation);
    CHECK_THROWS_AS(eia_select(trace_of({1.0}), ErrorTrace(6)), ContractViolation);
}

TEST_CASE("model selection is invariant to a common error scale") {
    std::mt19937_64 rng(56);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int round = 0; round < 50; ++round) {
        std::vector<double> errs_s, errs_c;
        const int n = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < n; ++i) {
            errs_s.push_back(u(rng));
            errs_c.push_back(u(rng));
        }
        const auto build = [&](double scale) {
            ErrorTrace ts(6), tc(6);
            for (double e : errs_s) ts.update(e * scale);
            for (double e : errs_c) tc.update(e * scale);
            return eia_select(ts, tc);
        };
        const ModelKind base = build(1.0);
        CHECK(build(0.5) == base);
        CHECK(build(3.0) == base);
        CHECK(build(1e6) == base);
    }
}

TEST_CASE("switcher starts on the network and flips within a window of bad errors") {
    ErrorIntersectionStrategy s;
    CHECK(s.active() == ModelKind::Complex);
    CHECK(s.emit(1.0, 2.0) == 2.0);

    // Both models exact: errors tie at zero, the network stays active.
    HourStamp ts(1000);
    for (int i = 0; i < 50; ++i) {
        CHECK(!s.observe(ts, 10.0, 10.0, 10.0).has_value());
        CHECK(s.active() == ModelKind::Complex);
        ++ts;
    }

    // The network degrades hard while the naive model stays close; the
    // EWMA crossover must happen within one window length.
    std::optional<SwitchEvent> event;
    int steps = 0;
    while (!event && steps < 6) {
        event = s.observe(ts, 100.0, 99.0, 0.0);  // |err_s|=1, |err_c|=100
        ++steps;
        ++ts;
    }
    REQUIRE(event.has_value());
    CHECK(steps == 1);  // zero-error history: one bad network hour decides it
    CHECK(event->from_model == ModelKind::Complex);
    CHECK(event->to_model == ModelKind::Simple);
    CHECK(event->trigger == TriggerKind::Eia);
    CHECK(s.active() == ModelKind::Simple);
    CHECK(s.emit(1.0, 2.0) == 1.0);
}

TEST_CASE("crossover happens by the window length after a sustained jump") {
    // Saturate both traces on a regime where the network wins, then jump.
    ErrorIntersectionStrategy s;
    HourStamp ts(0);
    for (int i = 0; i < 20; ++i) {
        s.observe(ts, 10.0, 9.0, 10.0);  // |err_s|=1, |err_c|=0
        ++ts;
    }
    CHECK(s.active() == ModelKind::Complex);

    const std::vector<double> seed_s = s.trace_simple().contents();
    const std::vector<double> seed_c = s.trace_complex().contents();
    std::deque<double> win_s(seed_s.begin(), seed_s.end());
    std::deque<double> win_c(seed_c.begin(), seed_c.end());
    int flip_at = -1;
    for (int step = 1; step <= 6; ++step) {
        const auto event = s.observe(ts, 100.0, 99.0, 0.0);
        ++ts;
        win_s.push_back(1.0);
        win_c.push_back(100.0);
        if (win_s.size() > 6) win_s.pop_front();
        if (win_c.size() > 6) win_c.pop_front();
        const bool oracle_simple =
            windowed_ewma(win_s, 2.0 / 7.0) < windowed_ewma(win_c, 2.0 / 7.0);
        if (event) {
            flip_at = step;
            CHECK(oracle_simple);
            break;
        }
        CHECK(!oracle_simple);
    }
    REQUIRE(flip_at > 0);
    CHECK(flip_at <= 6);
    CHECK(s.active() == ModelKind::Simple);
}

TEST_CASE("switch events alternate and replay matches an independent oracle") {
    // 10,000 noisy steps with alternating regimes so both models take turns.
    std::mt19937_64 rng(57);
    std::normal_distribution<double> noise(0.0, 1.0);

    ErrorIntersectionStrategy s;
    std::deque<double> win_s, win_c;
    ModelKind oracle_active = ModelKind::Complex;
    int switches = 0;
    std::optional<ModelKind> last_to;

    HourStamp ts(50000);
    for (int step = 0; step < 10000; ++step) {
        const bool complex_regime = (step / 500) % 2 == 0;
        const double actual = 50.0 + 10.0 * noise(rng);
        const double pred_simple = actual + noise(rng) * 3.0;
        const double pred_complex = actual + noise(rng) * (complex_regime ? 1.0 : 6.0);

        CHECK(s.active() == oracle_active);
        CHECK(s.emit(pred_simple, pred_complex) ==
              (oracle_active == ModelKind::Simple ? pred_simple : pred_complex));

        const auto event = s.observe(ts, actual, pred_simple, pred_complex);

        win_s.push_back(std::abs(actual - pred_simple));
        win_c.push_back(std::abs(actual - pred_complex));
        if (win_s.size() > 6) win_s.pop_front();
        if (win_c.size() > 6) win_c.pop_front();
        const ModelKind oracle_next =
            windowed_ewma(win_s, 2.0 / 7.0) < windowed_ewma(win_c, 2.0 / 7.0)
                ? ModelKind::Simple
                : ModelKind::Complex;

        if (oracle_next != oracle_active) {
            REQUIRE(event.has_value());
            CHECK(event->timestamp == ts);
            CHECK(event->from_model == oracle_active);
            CHECK(event->to_model == oracle_next);
            CHECK(event->from_model != event->to_model);
            if (last_to) {
                CHECK(event->from_model == *last_to);
            }
            last_to = event->to_model;
            ++switches;
        } else {
            CHECK(!event.has_value());
        }
        oracle_active = oracle_next;
        ++ts;
    }
    // The alternating regimes must actually exercise switching.
    CHECK(switches >= 10);
}

TEST_CASE("ensemble weights are the complementary error shares") {
    // One third of the error mass earns the other two thirds of the weight.
    const ErrorTrace ts = trace_of({2.0});
    const ErrorTrace tc = trace_of({1.0});
    const EnsembleWeights w = ensemble_weights(ts, tc);
    CHECK(w.complex == 2.0 / 3.0);
    CHECK(w.simple == 1.0 / 3.0);

    const EnsembleWeights even = ensemble_weights(trace_of({4.0}), trace_of({4.0}));
    CHECK(even.simple == 0.5);
    CHECK(even.complex == 0.5);

    const EnsembleWeights degenerate = ensemble_weights(trace_of({0.0}), trace_of({0.0}));
    CHECK(degenerate.simple == 0.5);
    CHECK(degenerate.complex == 0.5);

    CHECK_THROWS_AS(ensemble_weights(ErrorTrace(6), trace_of({1.0})), ContractViolation);
}

TEST_CASE("ensemble weight ordering and normalization") {
    std::mt19937_64 rng(58);
    std::uniform_real_distribution<double> u(0.0, 30.0);
    for (int round = 0; round < 100; ++round) {
        ErrorTrace ts(6), tc(6);
        const int n = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < n; ++i) {
            ts.update(u(rng));
            tc.update(u(rng));
        }
        const EnsembleWeights w = ensemble_weights(ts, tc);
        CHECK(w.simple >= 0.0);
        CHECK(w.complex >= 0.0);
        CHECK(w.simple + w.complex == doctest::Approx(1.0).epsilon(1e-12));
        if (ts.ewma() > tc.ewma()) {
            CHECK(w.simple < w.complex);
        } else if (tc.ewma() > ts.ewma()) {
            CHECK(w.complex < w.simple);
        }
    }
}

TEST_CASE("ensemble prediction is a checked convex combination") {
    CHECK(ensemble_predict({1.0, 0.0}, 7.0, 99.0) == 7.0);
    CHECK(ensemble_predict({0.0, 1.0}, 7.0, 99.0) == 99.0);
    CHECK(ensemble_predict({0.5, 0.5}, 10.0, 20.0) == 15.0);

    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int round = 0; round < 50; ++round) {
        const double ws = u(rng);
        const EnsembleWeights w{ws, 1.0 - ws};
        const double ps = 100.0 * u(rng);
        const double pc = 100.0 * u(rng);
        const double blended = ensemble_predict(w, ps, pc);
        CHECK(blended >= std::min(ps, pc) - 1e-12);
        CHECK(blended <= std::max(ps, pc) + 1e-12);
        CHECK(ensemble_predict(w, 42.0, 42.0) == doctest::Approx(42.0).epsilon(1e-12));
    }

    CHECK_THROWS_AS(ensemble_predict({0.6, 0.6}, 1.0, 2.0), ContractViolation);
    CHECK_THROWS_AS(ensemble_predict({-0.1, 1.1}, 1.0, 2.0), ContractViolation);
}

TEST_CASE("ensemble strategy blends continuously and never reports switches") {
    EnsembleStrategy s;
    CHECK(s.active() == ModelKind::Complex);  // even split favors the network
    CHECK(s.emit(10.0, 20.0) == 15.0);

    HourStamp ts(0);
    // The naive model is exact while the network misses by 10.
    for (int i = 0; i < 8; ++i) {
        CHECK(!s.observe(ts, 10.0, 10.0, 0.0).has_value());
        ++ts;
    }
    CHECK(s.active() == ModelKind::Simple);
    const EnsembleWeights w = s.weights();
    CHECK(w.simple > w.complex);
    // Zero error on the naive side maximizes its weight.
    CHECK(w.simple == 1.0);
    CHECK(s.emit(7.0, 1000.0) == 7.0);
    CHECK(s.ewma_simple() == 0.0);
    CHECK(s.ewma_complex() > 0.0);
}
