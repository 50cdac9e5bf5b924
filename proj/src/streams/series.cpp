#include "driftcast/streams/series.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "driftcast/errors.hpp"

namespace driftcast::streams {

HourStamp ZoneSeries::last_timestamp() const {
    if (demand.empty()) {
        throw ContractViolation("ZoneSeries::last_timestamp: series is empty");
    }
    return timestamp_at(demand.size() - 1);
}

void write_demand_csv(const std::filesystem::path& path, std::span<const ZoneSeries> zones) {
    std::vector<const ZoneSeries*> ordered;
    ordered.reserve(zones.size());
    for (const ZoneSeries& z : zones) {
        ordered.push_back(&z);
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const ZoneSeries* a, const ZoneSeries* b) { return a->zone_id < b->zone_id; });

    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open for writing: " + path.string());
    }
    out << "timestamp,zone_id,demand\n";
    char buf[64];
    for (const ZoneSeries* z : ordered) {
        for (std::size_t i = 0; i < z->demand.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g", z->demand[i]);
            out << z->timestamp_at(i).to_string() << ',' << z->zone_id << ',' << buf << '\n';
        }
    }
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

std::vector<ZoneSeries> read_demand_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open for reading: " + path.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw IoError("empty demand file: " + path.string());
    }

    std::map<int, std::vector<std::pair<HourStamp, double>>> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::istringstream ss(line);
        std::string ts_field, zone_field, demand_field;
        if (!std::getline(ss, ts_field, ',') || !std::getline(ss, zone_field, ',') ||
            !std::getline(ss, demand_field)) {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": malformed row");
        }
        const auto ts = HourStamp::try_parse(ts_field);
        if (!ts) {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": bad timestamp");
        }
        std::size_t pos = 0;
        int zone = 0;
        double demand = 0.0;
        try {
            zone = std::stoi(zone_field, &pos);
            if (pos != zone_field.size()) {
                throw std::invalid_argument("trailing");
            }
            demand = std::stod(demand_field, &pos);
            if (pos != demand_field.size()) {
                throw std::invalid_argument("trailing");
            }
        } catch (const std::exception&) {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": bad number");
        }
        rows[zone].emplace_back(*ts, demand);
    }

    std::vector<ZoneSeries> result;
    result.reserve(rows.size());
    for (auto& [zone_id, entries] : rows) {
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        ZoneSeries series;
        series.zone_id = zone_id;
        series.start = entries.front().first;
        series.demand.reserve(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].first != series.start + static_cast<std::int64_t>(i)) {
                throw IoError(path.string() + ": zone " + std::to_string(zone_id) +
                              " is not hourly-continuous at " + entries[i].first.to_string());
            }
            series.demand.push_back(entries[i].second);
        }
        result.push_back(std::move(series));
    }
    return result;
}

} // namespace driftcast::streams
