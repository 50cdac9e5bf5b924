#include "driftcast/streams/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "driftcast/errors.hpp"

namespace driftcast::streams {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

std::size_t find_column(const std::vector<std::string>& header, const std::string& name,
                        const std::filesystem::path& path) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
        throw ConfigError("column '" + name + "' not found in " + path.string());
    }
    return static_cast<std::size_t>(it - header.begin());
}

std::optional<double> parse_real(const std::string& field) {
    try {
        std::size_t pos = 0;
        const double value = std::stod(field, &pos);
        if (pos != field.size() || !std::isfinite(value)) {
            return std::nullopt;
        }
        return value;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<int> parse_zone(const std::string& field) {
    try {
        std::size_t pos = 0;
        const int value = std::stoi(field, &pos);
        if (pos != field.size()) {
            return std::nullopt;
        }
        return value;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace

IngestResult ingest_trips(const std::filesystem::path& path, const IngestOptions& options) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open trip file: " + path.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw IoError("trip file has no header: " + path.string());
    }
    // Strip a UTF-8 BOM so the first header name still matches.
    if (line.size() >= 3 && line[0] == '\xEF' && line[1] == '\xBB' && line[2] == '\xBF') {
        line.erase(0, 3);
    }
    const std::vector<std::string> header = split_fields(line);
    const std::size_t dt_col = find_column(header, options.datetime_column, path);
    const std::size_t zone_col = find_column(header, options.zone_column, path);
    const std::size_t dist_col = find_column(header, options.distance_column, path);
    const std::size_t dur_col = find_column(header, options.duration_column, path);

    IngestResult result;
    std::map<int, std::map<HourStamp, double>> counts;
    std::optional<HourStamp> span_begin;
    std::optional<HourStamp> span_end;
    std::size_t line_no = 1;

    const auto fail_row = [&](const std::string& reason) {
        if (options.strict) {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": " + reason);
        }
        ++result.malformed;
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> fields = split_fields(line);
        const std::size_t needed = std::max({dt_col, zone_col, dist_col, dur_col}) + 1;
        if (fields.size() < needed) {
            fail_row("too few fields");
            continue;
        }
        const auto ts = HourStamp::try_parse(fields[dt_col]);
        if (!ts) {
            fail_row("bad datetime");
            continue;
        }
        const auto zone = parse_zone(fields[zone_col]);
        const auto distance = parse_real(fields[dist_col]);
        const auto duration = parse_real(fields[dur_col]);
        if (!zone || !distance || !duration || *distance < 0.0 || *duration < 0.0) {
            fail_row("bad numeric field");
            continue;
        }
        if (*distance == 0.0 || *duration == 0.0) {
            ++result.zero_outliers;
            continue;
        }
        counts[*zone][*ts] += 1.0;
        ++result.valid_trips;
        if (!span_begin || *ts < *span_begin) {
            span_begin = *ts;
        }
        if (!span_end || *span_end < *ts) {
            span_end = *ts;
        }
    }

    if (!span_begin) {
        return result;
    }
    const std::size_t span_hours = static_cast<std::size_t>(*span_end - *span_begin) + 1;
    for (const auto& [zone_id, by_hour] : counts) {
        ZoneSeries series;
        series.zone_id = zone_id;
        series.start = *span_begin;
        series.demand.assign(span_hours, 0.0);
        for (const auto& [ts, count] : by_hour) {
            series.demand[static_cast<std::size_t>(ts - *span_begin)] = count;
        }
        result.zones.push_back(std::move(series));
    }
    return result;
}

} // namespace driftcast::streams
