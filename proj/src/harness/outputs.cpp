#include "driftcast/harness/outputs.hpp"

#include <cstdio>
#include <fstream>

#include "driftcast/errors.hpp"

namespace driftcast::harness {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    return out;
}

void close_checked(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

std::string num(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

} // namespace

void emit_outputs(const ExperimentResult& result, const std::filesystem::path& output_dir) {
    std::error_code ec;
    std::filesystem::create_directories(output_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + output_dir.string() + ": " +
                      ec.message());
    }

    {
        const auto path = output_dir / "report.json";
        auto out = open_out(path);
        out << report_to_json(result.report);
        close_checked(out, path);
    }
    {
        const auto path = output_dir / "forecasts.csv";
        auto out = open_out(path);
        out << "zone_id,timestamp,actual,pred_simple,pred_complex,emitted,active_model,scored\n";
        for (const LoggedForecast& row : result.forecasts) {
            out << row.zone_id << ',' << row.pair.timestamp.to_string() << ','
                << num(row.pair.actual) << ',' << num(row.pair.pred_simple) << ','
                << num(row.pair.pred_complex) << ',' << num(row.pair.emitted) << ','
                << to_string(row.pair.active_model) << ',' << (row.scored ? 1 : 0) << '\n';
        }
        close_checked(out, path);
    }
    {
        const auto path = output_dir / "switches.csv";
        auto out = open_out(path);
        out << "zone_id,timestamp,from_model,to_model,trigger,ewma_simple,ewma_complex\n";
        for (const SwitchRecord& row : result.switches) {
            out << row.zone_id << ',' << row.event.timestamp.to_string() << ','
                << to_string(row.event.from_model) << ',' << to_string(row.event.to_model) << ','
                << to_string(row.event.trigger) << ',' << num(row.ewma_simple) << ','
                << num(row.ewma_complex) << '\n';
        }
        close_checked(out, path);
    }
    {
        const auto path = output_dir / "per_day.csv";
        auto out = open_out(path);
        out << "date,rmse_improvement_vs_complex,simple_hours,day_hours\n";
        for (const PerDayRow& row : result.report.per_day) {
            out << row.date << ',' << num(row.improvement) << ',' << row.simple_hours << ','
                << row.day_hours << '\n';
        }
        close_checked(out, path);
    }
    {
        const auto path = output_dir / "plotdata.csv";
        auto out = open_out(path);
        out << "zone_id,timestamp,actual,pred_simple,pred_complex,emitted,ewma_simple,"
               "ewma_complex\n";
        for (const PlotRow& row : result.plot) {
            out << row.zone_id << ',' << row.timestamp.to_string() << ',' << num(row.actual)
                << ',' << num(row.pred_simple) << ',' << num(row.pred_complex) << ','
                << num(row.emitted) << ',' << num(row.ewma_simple) << ','
                << num(row.ewma_complex) << '\n';
        }
        close_checked(out, path);
    }
}

} // namespace driftcast::harness
