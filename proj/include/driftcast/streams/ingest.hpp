#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "driftcast/streams/series.hpp"

namespace driftcast::streams {

struct IngestOptions {
    std::string datetime_column = "pickup_datetime";
    std::string zone_column = "zone_id";
    std::string distance_column = "distance";
    std::string duration_column = "duration";
    // Lenient mode counts and skips malformed rows; strict mode fails on the
    // first one.
    bool strict = false;
};

struct IngestResult {
    std::vector<ZoneSeries> zones;
    std::uint64_t valid_trips = 0;
    std::uint64_t zero_outliers = 0;  // rows dropped for distance or duration == 0
    std::uint64_t malformed = 0;
};

/**
 * Aggregates a trip-record CSV into hourly per-zone demand counts. Trips
 * with zero distance or zero duration are discarded as outliers; every zone
 * stream is zero-filled across the full observed time span so all series
 * stay hourly-continuous and aligned. Fields must be comma-separated
 * without quoting.
 */
IngestResult ingest_trips(const std::filesystem::path& path, const IngestOptions& options = {});

} // namespace driftcast::streams
