#include "driftcast/detectors/adwin.hpp"

#include <cmath>

#include "driftcast/errors.hpp"

namespace driftcast::detectors {

namespace {

double items_at_level(std::size_t level) {
    return static_cast<double>(std::uint64_t{1} << level);
}

} // namespace

Adwin::Adwin(AdwinParams params) : params_(params) {
    if (!(params.delta_conf > 0.0 && params.delta_conf < 1.0)) {
        throw ContractViolation("Adwin: delta_conf must lie in (0,1)");
    }
    if (params.max_buckets < 2) {
        throw ContractViolation("Adwin: max_buckets must be at least 2");
    }
}

AdwinInsertResult Adwin::insert(double value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw ContractViolation("Adwin::insert: value must lie in [0,1]");
    }
    if (width_ > 0) {
        const double mean_before = total_sum_ / static_cast<double>(width_);
        const double delta = value - mean_before;
        total_var_ += delta * delta * static_cast<double>(width_) /
                      static_cast<double>(width_ + 1);
    }
    ++width_;
    total_sum_ += value;
    append_level0(value);
    compress();

    AdwinInsertResult result;
    while (width_ >= 2 && scan_for_cut()) {
        result.drift = true;
        drop_oldest(result);
    }
    return result;
}

void Adwin::append_level0(double value) {
    if (levels_.empty()) {
        levels_.emplace_back();
    }
    levels_[0].push_back({value, 0.0});
}

void Adwin::compress() {
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        while (levels_[i].size() > static_cast<std::size_t>(params_.max_buckets) + 1) {
            const Bucket a = levels_[i][0];
            const Bucket b = levels_[i][1];
            levels_[i].pop_front();
            levels_[i].pop_front();
            const double n = items_at_level(i);
            const double ua = a.sum / n;
            const double ub = b.sum / n;
            // Parallel-axis combination of two equal-sized groups.
            Bucket merged;
            merged.sum = a.sum + b.sum;
            merged.var = a.var + b.var + n * (ua - ub) * (ua - ub) / 2.0;
            if (i + 1 == levels_.size()) {
                levels_.emplace_back();
            }
            // The merged pair holds the oldest level-i items, which are still
            // newer than everything already promoted to level i+1.
            levels_[i + 1].push_back(merged);
        }
    }
}

void Adwin::drop_oldest(AdwinInsertResult& result) {
    std::size_t top = levels_.size();
    while (top > 0 && levels_[top - 1].empty()) {
        --top;
    }
    if (top == 0) {
        return;
    }
    const std::size_t level = top - 1;
    const Bucket bucket = levels_[level].front();
    levels_[level].pop_front();
    while (!levels_.empty() && levels_.back().empty()) {
        levels_.pop_back();
    }

    const std::uint64_t n = std::uint64_t{1} << level;
    width_ -= n;
    total_sum_ -= bucket.sum;
    result.dropped += n;
    if (width_ == 0) {
        total_sum_ = 0.0;
        total_var_ = 0.0;
        return;
    }
    const double nd = static_cast<double>(n);
    const double rest = static_cast<double>(width_);
    const double u = bucket.sum / nd;
    const double mean_rest = total_sum_ / rest;
    total_var_ -= bucket.var + nd * rest * (u - mean_rest) * (u - mean_rest) / (nd + rest);
    if (total_var_ < 0.0) {
        total_var_ = 0.0;
    }
}

bool Adwin::scan_for_cut() const {
    const double n = static_cast<double>(width_);
    const double s2 = total_var_ / n;
    const double dp = std::log(2.0 * n / params_.delta_conf);

    double n0 = 0.0;
    double sum0 = 0.0;
    // Boundaries between consecutive buckets, walked oldest to newest.
    for (std::size_t li = levels_.size(); li-- > 0;) {
        const double per_bucket = items_at_level(li);
        for (const Bucket& bucket : levels_[li]) {
            n0 += per_bucket;
            sum0 += bucket.sum;
            const double n1 = n - n0;
            if (n1 <= 0.0) {
                break;
            }
            const double m = 1.0 / n0 + 1.0 / n1;
            const double eps = std::sqrt(2.0 * m * s2 * dp) + (2.0 / 3.0) * m * dp;
            const double diff = std::abs(sum0 / n0 - (total_sum_ - sum0) / n1);
            if (diff >= eps) {
                return true;
            }
        }
    }
    return false;
}

double Adwin::mean() const {
    if (width_ == 0) {
        throw ContractViolation("Adwin::mean: window is empty");
    }
    return total_sum_ / static_cast<double>(width_);
}

double Adwin::variance() const {
    if (width_ == 0) {
        return 0.0;
    }
    return total_var_ / static_cast<double>(width_);
}

std::size_t Adwin::bucket_count() const {
    std::size_t count = 0;
    for (const auto& level : levels_) {
        count += level.size();
    }
    return count;
}

void Adwin::reset() {
    levels_.clear();
    width_ = 0;
    total_sum_ = 0.0;
    total_var_ = 0.0;
}

} // namespace driftcast::detectors
