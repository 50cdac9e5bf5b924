#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "driftcast/time.hpp"

namespace driftcast::streams {

/**
 * Dense hourly demand for one zone: demand[i] belongs to start + i hours.
 * Gap-free by construction; producers fill missing hours with 0.
 */
struct ZoneSeries {
    int zone_id = 0;
    HourStamp start{0};
    std::vector<double> demand;

    std::size_t size() const { return demand.size(); }
    bool empty() const { return demand.empty(); }
    HourStamp timestamp_at(std::size_t index) const {
        return start + static_cast<std::int64_t>(index);
    }
    HourStamp last_timestamp() const;
};

/// Writes zone streams as CSV (header timestamp,zone_id,demand), zones in
/// ascending id order, each zone's rows in time order.
void write_demand_csv(const std::filesystem::path& path, std::span<const ZoneSeries> zones);

/// Reads the canonical demand CSV back. Rows may arrive in any order; each
/// zone must form a gap-free hourly sequence without duplicates.
std::vector<ZoneSeries> read_demand_csv(const std::filesystem::path& path);

} // namespace driftcast::streams
