#pragma once

#include <utility>
#include <vector>

#include "driftcast/streams/series.hpp"

namespace driftcast::streams {

/// Keeps the k zones with the largest total demand (ties favor the smaller
/// zone id); when fewer than k zones exist, all are kept. Output stays in
/// ascending zone-id order.
std::vector<ZoneSeries> top_zones_filter(const std::vector<ZoneSeries>& zones, int k = 20);

/// Splits one series at train_end: train takes every hour up to and
/// including it, test everything after. train_end must fall inside the
/// series span.
std::pair<ZoneSeries, ZoneSeries> temporal_split(const ZoneSeries& series, HourStamp train_end);

} // namespace driftcast::streams
