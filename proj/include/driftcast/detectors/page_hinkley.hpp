#pragma once

#include <cstdint>

namespace driftcast::detectors {

struct PageHinkleyParams {
    double delta = 0.005;   // tolerated drift per step, subtracted from each deviation
    double lambda = 50.0;   // detection threshold on the cumulative deviation range
    double alpha = 0.9999;  // fading factor for the running mean
};

/**
 * Page-Hinkley test for upward shifts in a stream's mean. The running mean
 * uses a fading weight sum (alpha close to 1 keeps long memory), the
 * cumulative statistic tracks deviations above mean + delta, and a drift
 * fires once the statistic rises more than lambda above its running minimum.
 * All state resets after a detection.
 */
class PageHinkley {
public:
    PageHinkley() = default;
    explicit PageHinkley(PageHinkleyParams params);

    /// Feeds one value; returns true when drift is flagged at this step.
    /// The value must be finite.
    bool update(double value);

    void reset();

    double mean_estimate() const { return mean_; }
    double cumulative() const { return m_t_; }
    double running_min() const { return min_m_t_; }
    std::uint64_t count() const { return count_; }
    const PageHinkleyParams& params() const { return params_; }

private:
    PageHinkleyParams params_{};
    double mean_ = 0.0;
    double weight_sum_ = 0.0;
    double m_t_ = 0.0;
    double min_m_t_ = 0.0;
    std::uint64_t count_ = 0;
};

} // namespace driftcast::detectors
