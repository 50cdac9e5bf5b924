#include "driftcast/streams/ops.hpp"

#include <algorithm>
#include <numeric>

#include "driftcast/errors.hpp"

namespace driftcast::streams {

std::vector<ZoneSeries> top_zones_filter(const std::vector<ZoneSeries>& zones, int k) {
    if (k < 1) {
        throw ContractViolation("top_zones_filter: k must be at least 1");
    }
    if (zones.size() <= static_cast<std::size_t>(k)) {
        return zones;
    }
    std::vector<double> totals(zones.size());
    for (std::size_t i = 0; i < zones.size(); ++i) {
        totals[i] = std::accumulate(zones[i].demand.begin(), zones[i].demand.end(), 0.0);
    }
    std::vector<std::size_t> order(zones.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (totals[a] != totals[b]) {
            return totals[a] > totals[b];
        }
        return zones[a].zone_id < zones[b].zone_id;
    });
    order.resize(static_cast<std::size_t>(k));
    std::sort(order.begin(), order.end());

    std::vector<ZoneSeries> kept;
    kept.reserve(order.size());
    for (std::size_t idx : order) {
        kept.push_back(zones[idx]);
    }
    std::sort(kept.begin(), kept.end(),
              [](const ZoneSeries& a, const ZoneSeries& b) { return a.zone_id < b.zone_id; });
    return kept;
}

std::pair<ZoneSeries, ZoneSeries> temporal_split(const ZoneSeries& series, HourStamp train_end) {
    if (series.empty()) {
        throw ContractViolation("temporal_split: series is empty");
    }
    if (train_end < series.start || series.last_timestamp() < train_end) {
        throw ContractViolation("temporal_split: train_end outside series span");
    }
    const std::size_t train_size = static_cast<std::size_t>(train_end - series.start) + 1;

    ZoneSeries train;
    train.zone_id = series.zone_id;
    train.start = series.start;
    train.demand.assign(series.demand.begin(),
                        series.demand.begin() + static_cast<std::ptrdiff_t>(train_size));

    ZoneSeries test;
    test.zone_id = series.zone_id;
    test.start = series.start + static_cast<std::int64_t>(train_size);
    test.demand.assign(series.demand.begin() + static_cast<std::ptrdiff_t>(train_size),
                       series.demand.end());
    return {std::move(train), std::move(test)};
}

} // namespace driftcast::streams
