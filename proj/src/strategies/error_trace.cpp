#include "driftcast/strategies/error_trace.hpp"

#include <cmath>

#include "driftcast/errors.hpp"

namespace driftcast::strategies {

ErrorTrace::ErrorTrace(std::size_t window)
    : ErrorTrace(window, 2.0 / (static_cast<double>(window) + 1.0)) {}

ErrorTrace::ErrorTrace(std::size_t window, double alpha) : alpha_(alpha) {
    if (window == 0) throw ContractViolation("ErrorTrace: window must be >= 1");
    if (!(alpha > 0.0) || alpha > 1.0) throw ContractViolation("ErrorTrace: alpha must be in (0, 1]");
    buf_.assign(window, 0.0);
}

void ErrorTrace::update(double abs_error) {
    if (!std::isfinite(abs_error) || abs_error < 0.0) {
        throw ContractViolation("ErrorTrace: error must be finite and >= 0");
    }
    buf_[next_] = abs_error;
    next_ = (next_ + 1) % buf_.size();
    if (count_ < buf_.size()) ++count_;
    recompute();
}

void ErrorTrace::recompute() {
    // Oldest to newest; the newest carries weight (1-alpha)^0.
    double num = 0.0;
    double den = 0.0;
    const double decay = 1.0 - alpha_;
    std::size_t idx = (next_ + buf_.size() - count_) % buf_.size();
    for (std::size_t k = 0; k < count_; ++k) {
        const double w = std::pow(decay, static_cast<double>(count_ - 1 - k));
        num += w * buf_[idx];
        den += w;
        idx = (idx + 1) % buf_.size();
    }
    ewma_ = num / den;
}

double ErrorTrace::ewma() const {
    if (count_ == 0) throw ContractViolation("ErrorTrace: ewma of empty trace");
    return ewma_;
}

std::vector<double> ErrorTrace::contents() const {
    std::vector<double> out;
    out.reserve(count_);
    std::size_t idx = (next_ + buf_.size() - count_) % buf_.size();
    for (std::size_t k = 0; k < count_; ++k) {
        out.push_back(buf_[idx]);
        idx = (idx + 1) % buf_.size();
    }
    return out;
}

void ErrorTrace::clear() {
    next_ = 0;
    count_ = 0;
    ewma_ = 0.0;
}

} // namespace driftcast::strategies
