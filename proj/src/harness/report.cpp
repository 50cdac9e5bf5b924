#include "driftcast/harness/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "driftcast/errors.hpp"

namespace driftcast::harness {

namespace {

using nlohmann::ordered_json;

double rmse_of(const std::vector<double>& preds, const std::vector<double>& actuals) {
    return metrics::rmse(preds, actuals);
}

void fnv_mix(std::uint64_t& hash, const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
        hash ^= bytes[i];
        hash *= 0x100000001B3ULL;
    }
}

} // namespace

std::vector<PerDayRow> per_day_analysis(std::span<const LoggedForecast> log) {
    struct DayAccum {
        std::set<unsigned> hours;
        std::set<unsigned> simple_hours;
        std::vector<double> actual;
        std::vector<double> emitted;
        std::vector<double> complex_pred;
    };
    std::map<std::string, DayAccum> days;
    for (const LoggedForecast& row : log) {
        if (!row.scored) {
            continue;
        }
        DayAccum& day = days[row.pair.timestamp.date_string()];
        day.hours.insert(row.pair.timestamp.hour());
        if (row.pair.active_model == ModelKind::Simple) {
            day.simple_hours.insert(row.pair.timestamp.hour());
        }
        day.actual.push_back(row.pair.actual);
        day.emitted.push_back(row.pair.emitted);
        day.complex_pred.push_back(row.pair.pred_complex);
    }
    if (days.empty()) {
        throw ContractViolation("per_day_analysis: no scored forecasts");
    }

    std::vector<PerDayRow> table;
    table.reserve(days.size());
    for (const auto& [date, day] : days) {
        PerDayRow row;
        row.date = date;
        row.improvement = rmse_of(day.complex_pred, day.actual) - rmse_of(day.emitted, day.actual);
        row.simple_hours = static_cast<int>(day.simple_hours.size());
        row.day_hours = static_cast<int>(day.hours.size());
        table.push_back(std::move(row));
    }
    std::stable_sort(table.begin(), table.end(), [](const PerDayRow& a, const PerDayRow& b) {
        return a.simple_hours > b.simple_hours;
    });
    return table;
}

std::optional<ConditionalImprovement> conditional_improvement(
    std::span<const LoggedForecast> log) {
    std::vector<double> actual;
    std::vector<double> emitted;
    std::vector<double> complex_pred;
    for (const LoggedForecast& row : log) {
        if (!row.scored || row.pair.active_model != ModelKind::Simple) {
            continue;
        }
        actual.push_back(row.pair.actual);
        emitted.push_back(row.pair.emitted);
        complex_pred.push_back(row.pair.pred_complex);
    }
    if (actual.empty()) {
        return std::nullopt;
    }
    ConditionalImprovement result;
    result.rmse_strategy = rmse_of(emitted, actual);
    result.rmse_complex = rmse_of(complex_pred, actual);
    result.relative =
        result.rmse_complex > 0.0 ? 1.0 - result.rmse_strategy / result.rmse_complex : 0.0;
    return result;
}

std::vector<ComparisonRow> compare_strategies(std::span<const EvaluationReport> reports) {
    if (reports.size() < 2) {
        throw ContractViolation("compare_strategies: need at least two reports");
    }
    for (const EvaluationReport& report : reports) {
        if (!(report.segment == reports.front().segment)) {
            throw ContractViolation(
                "compare_strategies: reports cover different streams or test segments");
        }
    }
    std::vector<ComparisonRow> rows;
    rows.reserve(reports.size());
    for (const EvaluationReport& report : reports) {
        ComparisonRow row;
        row.strategy = report.strategy;
        row.rmse = report.rmse;
        row.smape = report.smape;
        row.switch_count = report.switch_count;
        row.simple_share = report.simple_share;
        row.dm_p_vs_complex = report.dm_vs_complex
                                  ? report.dm_vs_complex->p_value
                                  : std::numeric_limits<double>::quiet_NaN();
        rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const ComparisonRow& a, const ComparisonRow& b) { return a.rmse < b.rmse; });
    return rows;
}

std::string render_comparison(std::span<const ComparisonRow> rows) {
    std::ostringstream out;
    out << "strategy    rmse          smape       switches  simple_share  p_vs_complex\n";
    char buf[160];
    for (const ComparisonRow& row : rows) {
        std::snprintf(buf, sizeof(buf), "%-10s  %-12.6g  %-10.6g  %-8d  %-12.6g  %-12.6g\n",
                      row.strategy.c_str(), row.rmse, row.smape, row.switch_count,
                      row.simple_share, row.dm_p_vs_complex);
        out << buf;
    }
    return out.str();
}

std::uint64_t stream_fingerprint(std::span<const streams::ZoneSeries> zones) {
    std::vector<const streams::ZoneSeries*> ordered;
    ordered.reserve(zones.size());
    for (const streams::ZoneSeries& zone : zones) {
        ordered.push_back(&zone);
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto* a, const auto* b) { return a->zone_id < b->zone_id; });

    std::uint64_t hash = 0xCBF29CE484222325ULL;
    for (const streams::ZoneSeries* zone : ordered) {
        const std::int64_t id = zone->zone_id;
        const std::int64_t start = zone->start.hours_since_epoch();
        fnv_mix(hash, &id, sizeof(id));
        fnv_mix(hash, &start, sizeof(start));
        for (double value : zone->demand) {
            fnv_mix(hash, &value, sizeof(value));
        }
    }
    return hash;
}

namespace {

ordered_json segment_to_json(const SegmentInfo& segment) {
    char fp[32];
    std::snprintf(fp, sizeof(fp), "%016llx",
                  static_cast<unsigned long long>(segment.stream_fingerprint));
    return ordered_json{{"test_start", segment.test_start.to_string()},
                        {"test_end", segment.test_end.to_string()},
                        {"n_scored", segment.n_scored},
                        {"stream_fingerprint", fp}};
}

SegmentInfo segment_from_json(const ordered_json& doc) {
    SegmentInfo segment;
    segment.test_start = HourStamp::parse(doc.at("test_start").get<std::string>());
    segment.test_end = HourStamp::parse(doc.at("test_end").get<std::string>());
    segment.n_scored = doc.at("n_scored").get<std::uint64_t>();
    segment.stream_fingerprint =
        std::stoull(doc.at("stream_fingerprint").get<std::string>(), nullptr, 16);
    return segment;
}

} // namespace

std::string report_to_json(const EvaluationReport& report) {
    ordered_json doc;
    doc["strategy"] = report.strategy;
    doc["seed"] = report.seed;
    doc["rmse"] = report.rmse;
    doc["smape"] = report.smape;
    doc["switch_count"] = report.switch_count;
    doc["simple_usage"] = ordered_json{{"count", report.simple_count},
                                       {"share", report.simple_share}};
    if (report.dm_vs_complex) {
        doc["dm_vs_complex"] = ordered_json{{"statistic", report.dm_vs_complex->statistic},
                                            {"p_value", report.dm_vs_complex->p_value},
                                            {"n", report.dm_vs_complex->n}};
    } else {
        doc["dm_vs_complex"] = nullptr;
    }
    if (report.conditional) {
        doc["conditional_improvement"] =
            ordered_json{{"rmse_strategy", report.conditional->rmse_strategy},
                         {"rmse_complex", report.conditional->rmse_complex},
                         {"relative", report.conditional->relative}};
    } else {
        doc["conditional_improvement"] = nullptr;
    }
    doc["per_day"] = ordered_json::array();
    for (const PerDayRow& row : report.per_day) {
        doc["per_day"].push_back(ordered_json{{"date", row.date},
                                              {"improvement", row.improvement},
                                              {"simple_hours", row.simple_hours},
                                              {"day_hours", row.day_hours}});
    }
    doc["per_zone"] = ordered_json::array();
    for (const PerZoneMetrics& zone : report.per_zone) {
        doc["per_zone"].push_back(ordered_json{{"zone_id", zone.zone_id},
                                               {"rmse", zone.rmse},
                                               {"smape", zone.smape},
                                               {"switch_count", zone.switch_count},
                                               {"simple_count", zone.simple_count},
                                               {"scored", zone.scored_count}});
    }
    doc["segment"] = segment_to_json(report.segment);
    return doc.dump(2) + "\n";
}

EvaluationReport report_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        throw IoError(std::string("invalid report JSON: ") + e.what());
    }
    try {
        EvaluationReport report;
        report.strategy = doc.at("strategy").get<std::string>();
        report.seed = doc.at("seed").get<std::uint64_t>();
        report.rmse = doc.at("rmse").get<double>();
        report.smape = doc.at("smape").get<double>();
        report.switch_count = doc.at("switch_count").get<int>();
        report.simple_count = doc.at("simple_usage").at("count").get<std::uint64_t>();
        report.simple_share = doc.at("simple_usage").at("share").get<double>();
        if (!doc.at("dm_vs_complex").is_null()) {
            metrics::DmResult dm;
            dm.statistic = doc.at("dm_vs_complex").at("statistic").get<double>();
            dm.p_value = doc.at("dm_vs_complex").at("p_value").get<double>();
            dm.n = doc.at("dm_vs_complex").at("n").get<std::size_t>();
            report.dm_vs_complex = dm;
        }
        if (!doc.at("conditional_improvement").is_null()) {
            ConditionalImprovement ci;
            ci.rmse_strategy = doc.at("conditional_improvement").at("rmse_strategy").get<double>();
            ci.rmse_complex = doc.at("conditional_improvement").at("rmse_complex").get<double>();
            ci.relative = doc.at("conditional_improvement").at("relative").get<double>();
            report.conditional = ci;
        }
        for (const ordered_json& entry : doc.at("per_day")) {
            PerDayRow row;
            row.date = entry.at("date").get<std::string>();
            row.improvement = entry.at("improvement").get<double>();
            row.simple_hours = entry.at("simple_hours").get<int>();
            row.day_hours = entry.at("day_hours").get<int>();
            report.per_day.push_back(std::move(row));
        }
        for (const ordered_json& entry : doc.at("per_zone")) {
            PerZoneMetrics zone;
            zone.zone_id = entry.at("zone_id").get<int>();
            zone.rmse = entry.at("rmse").get<double>();
            zone.smape = entry.at("smape").get<double>();
            zone.switch_count = entry.at("switch_count").get<int>();
            zone.simple_count = entry.at("simple_count").get<std::uint64_t>();
            zone.scored_count = entry.at("scored").get<std::uint64_t>();
            report.per_zone.push_back(zone);
        }
        report.segment = segment_from_json(doc.at("segment"));
        return report;
    } catch (const ordered_json::exception& e) {
        throw IoError(std::string("malformed report JSON: ") + e.what());
    }
}

} // namespace driftcast::harness
