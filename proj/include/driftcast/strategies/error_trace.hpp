#pragma once

#include <cstddef>
#include <vector>

namespace driftcast::strategies {

/**
 * Ring buffer of the most recent absolute prediction errors with a cached
 * exponentially weighted moving average.
 *
 * The EWMA is normalized over the finite window: with weights
 * w_i = (1 - alpha)^age (age 0 = newest), ewma = sum(w_i e_i) / sum(w_i).
 * Default smoothing follows the span form alpha = 2 / (window + 1).
 */
class ErrorTrace {
public:
    explicit ErrorTrace(std::size_t window = 6);
    ErrorTrace(std::size_t window, double alpha);

    /// Appends an absolute error, evicting the oldest when full.
    /// Throws ContractViolation on negative or non-finite input.
    void update(double abs_error);

    /// Cached EWMA; throws ContractViolation while the trace is empty.
    double ewma() const;

    bool empty() const { return count_ == 0; }
    std::size_t size() const { return count_; }
    std::size_t capacity() const { return buf_.size(); }
    double alpha() const { return alpha_; }

    /// Window contents oldest to newest (test and logging aid).
    std::vector<double> contents() const;

    void clear();

private:
    std::vector<double> buf_;
    std::size_t next_ = 0;   // slot the next update writes to
    std::size_t count_ = 0;
    double alpha_;
    double ewma_ = 0.0;

    void recompute();
};

} // namespace driftcast::strategies
