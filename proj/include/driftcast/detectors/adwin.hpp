#pragma once

#include <cstdint>
#include <deque>
#include <vector>

namespace driftcast::detectors {

struct AdwinParams {
    double delta_conf = 0.002;  // confidence parameter of the cut test
    int max_buckets = 5;        // per-level capacity M; merging kicks in above M+1
};

struct AdwinInsertResult {
    bool drift = false;
    std::uint64_t dropped = 0;  // items removed from the old end during this insertion
};

/**
 * Adaptive windowing over an exponential histogram. Buckets at level i hold
 * exactly 2^i items; once a level exceeds M+1 buckets its two oldest are
 * merged one level up. Every insertion tests each bucket boundary as a
 * split: with sub-window sizes n0 (old side) and n1, harmonic term
 * m = 1/n0 + 1/n1, window variance s2 and dp = ln(2n/delta_conf), the cut
 * fires when |mu0 - mu1| >= sqrt(2 m s2 dp) + (2/3) m dp. Each violation
 * drops the oldest bucket and rescans.
 *
 * The whole-window sum/variance accumulators are maintained incrementally
 * (parallel-axis combination on merge, reversal on drop) so they always
 * describe exactly the retained items.
 */
class Adwin {
public:
    Adwin() = default;
    explicit Adwin(AdwinParams params);

    /// Inserts one value in [0,1]; reports drift plus how many old items
    /// were evicted to restore homogeneity.
    AdwinInsertResult insert(double value);

    void reset();

    std::uint64_t width() const { return width_; }
    double sum() const { return total_sum_; }
    /// Mean of the retained window; requires at least one item.
    double mean() const;
    /// Population variance of the retained window (0 when empty).
    double variance() const;
    std::size_t bucket_count() const;
    std::size_t level_count() const { return levels_.size(); }
    const AdwinParams& params() const { return params_; }

private:
    struct Bucket {
        double sum = 0.0;
        double var = 0.0;  // internal sum of squared deviations
    };

    void append_level0(double value);
    void compress();
    void drop_oldest(AdwinInsertResult& result);
    bool scan_for_cut() const;

    AdwinParams params_{};
    // levels_[i] holds the level-i buckets, oldest first; every bucket at
    // level i+1 predates every bucket at level i.
    std::vector<std::deque<Bucket>> levels_;
    std::uint64_t width_ = 0;
    double total_sum_ = 0.0;
    double total_var_ = 0.0;
};

} // namespace driftcast::detectors
