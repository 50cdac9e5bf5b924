#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "driftcast/errors.hpp"
#include "driftcast/harness/config.hpp"
#include "driftcast/harness/experiment.hpp"
#include "driftcast/harness/outputs.hpp"
#include "driftcast/streams/ingest.hpp"
#include "driftcast/streams/ops.hpp"
#include "driftcast/streams/synthetic.hpp"

namespace {

using namespace driftcast;

streams::DriftEvent parse_event_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream ss(spec);
    while (std::getline(ss, part, ':')) {
        parts.push_back(part);
    }
    if (parts.size() < 4 || parts.size() > 5) {
        throw ConfigError("event spec must be kind:start:end:magnitude[:z1|z2|...], got '" +
                          spec + "'");
    }
    streams::DriftEvent event;
    if (parts[0] == "drop") {
        event.kind = streams::DriftEventKind::SuddenDrop;
    } else if (parts[0] == "spike") {
        event.kind = streams::DriftEventKind::SuddenSpike;
    } else if (parts[0] == "shift") {
        event.kind = streams::DriftEventKind::IncrementalShift;
    } else {
        throw ConfigError("unknown event kind '" + parts[0] + "' (expected drop|spike|shift)");
    }
    try {
        event.start_hour = std::stoll(parts[1]);
        event.end_hour = std::stoll(parts[2]);
        event.magnitude = std::stod(parts[3]);
        if (parts.size() == 5) {
            std::istringstream zs(parts[4]);
            std::string zone;
            while (std::getline(zs, zone, '|')) {
                event.affected_zones.push_back(std::stoi(zone));
            }
        }
    } catch (const std::exception&) {
        throw ConfigError("bad number in event spec '" + spec + "'");
    }
    return event;
}

std::string event_kind_name(streams::DriftEventKind kind) {
    switch (kind) {
        case streams::DriftEventKind::SuddenDrop: return "sudden_drop";
        case streams::DriftEventKind::SuddenSpike: return "sudden_spike";
        case streams::DriftEventKind::IncrementalShift: return "incremental_shift";
    }
    return "?";
}

void write_truth(const std::string& path, const std::vector<streams::DriftEvent>& events) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const streams::DriftEvent& event : events) {
        nlohmann::ordered_json entry{{"kind", event_kind_name(event.kind)},
                                     {"start_hour", event.start_hour},
                                     {"end_hour", event.end_hour},
                                     {"magnitude", event.magnitude},
                                     {"affected_zones", event.affected_zones}};
        doc.push_back(std::move(entry));
    }
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path);
    }
    out << doc.dump(2) << "\n";
}

int run_generate(const streams::SyntheticConfig& config, const std::string& out_path,
                 const std::string& truth_path) {
    const streams::SyntheticResult result = streams::generate_synthetic(config);
    streams::write_demand_csv(out_path, result.zones);
    if (!truth_path.empty()) {
        write_truth(truth_path, result.truth);
    }
    std::cout << "wrote " << result.zones.size() << " zones x " << config.num_hours
              << " hours to " << out_path << "\n";
    return 0;
}

int run_ingest(const std::string& in_path, const std::string& out_path,
               const streams::IngestOptions& options, int top_zones) {
    streams::IngestResult result = streams::ingest_trips(in_path, options);
    std::size_t total_zones = result.zones.size();
    if (top_zones > 0) {
        if (result.zones.size() < static_cast<std::size_t>(top_zones)) {
            std::cerr << "warning: only " << result.zones.size() << " zones present, keeping all\n";
        }
        result.zones = streams::top_zones_filter(result.zones, top_zones);
    }
    streams::write_demand_csv(out_path, result.zones);
    std::cout << "valid trips: " << result.valid_trips
              << ", zero-distance/duration outliers: " << result.zero_outliers
              << ", malformed rows: " << result.malformed << "\n"
              << "zones: " << result.zones.size();
    if (result.zones.size() != total_zones) {
        std::cout << " (of " << total_zones << ")";
    }
    std::cout << " -> " << out_path << "\n";
    return 0;
}

int run_experiment_cmd(harness::ExperimentConfig config) {
    harness::validate_config(config);
    const harness::ExperimentResult result = harness::run_experiment(config);
    harness::emit_outputs(result, config.output_dir);
    const harness::EvaluationReport& report = result.report;
    std::cout << "strategy " << report.strategy << ": rmse " << report.rmse << ", smape "
              << report.smape << ", switches " << report.switch_count << ", naive share "
              << report.simple_share << " over " << report.segment.n_scored
              << " scored hours\n"
              << "outputs in " << config.output_dir << "\n";
    return 0;
}

int run_compare(const std::vector<std::string>& report_paths, const std::string& out_path) {
    std::vector<harness::EvaluationReport> reports;
    for (const std::string& path : report_paths) {
        std::ifstream in(path);
        if (!in) {
            throw IoError("cannot open report: " + path);
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        reports.push_back(harness::report_from_json(buffer.str()));
    }
    const auto rows = harness::compare_strategies(reports);
    const std::string table = harness::render_comparison(rows);
    std::cout << table;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            throw IoError("cannot write " + out_path);
        }
        out << table;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"streaming demand forecasting with drift-aware model switching"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "write a synthetic demand stream as CSV");
    streams::SyntheticConfig synth;
    std::string gen_out = "demand.csv";
    std::string gen_truth;
    std::string gen_start;
    std::vector<std::string> gen_events;
    generate->add_option("--out", gen_out, "output demand CSV path");
    generate->add_option("--hours", synth.num_hours, "stream length in hours")->required();
    generate->add_option("--zones", synth.num_zones, "number of zones");
    generate->add_option("--base-level", synth.base_level, "mean demand level");
    generate->add_option("--daily-amplitude", synth.daily_amplitude, "daily sinus amplitude");
    generate->add_option("--weekly-amplitude", synth.weekly_amplitude, "weekend uplift factor");
    generate->add_option("--noise-std", synth.noise_std, "Gaussian noise std");
    generate->add_option("--trend", synth.trend_per_hour, "linear demand slope per hour");
    generate->add_option("--start", gen_start, "first hour, e.g. 2015-01-01T00:00:00");
    generate->add_option("--seed", synth.seed, "stream seed")->required();
    generate->add_option("--event", gen_events,
                         "drift event kind:start:end:magnitude[:z1|z2|...], kind in "
                         "drop|spike|shift; repeatable");
    generate->add_option("--truth", gen_truth, "also write the event list as JSON");

    // ingest
    auto* ingest = app.add_subcommand("ingest", "aggregate trip records into hourly demand");
    std::string ingest_in, ingest_out = "demand.csv";
    streams::IngestOptions ingest_options;
    int ingest_top = 0;
    ingest->add_option("--in", ingest_in, "trip CSV path")->required();
    ingest->add_option("--out", ingest_out, "output demand CSV path");
    ingest->add_option("--datetime-col", ingest_options.datetime_column, "pickup datetime column");
    ingest->add_option("--zone-col", ingest_options.zone_column, "zone id column");
    ingest->add_option("--distance-col", ingest_options.distance_column, "distance column");
    ingest->add_option("--duration-col", ingest_options.duration_column, "duration column");
    ingest->add_flag("--strict", ingest_options.strict, "fail on the first malformed row");
    ingest->add_option("--top-zones", ingest_top, "keep only the K busiest zones (0 = all)");

    // run
    auto* run = app.add_subcommand("run", "run one experiment and write its outputs");
    std::string run_config_path;
    std::vector<std::string> run_sets;
    std::string run_strategy, run_csv, run_train_end, run_output;
    std::optional<std::int64_t> run_train_hours, run_year_length;
    std::optional<std::uint64_t> run_seed;
    std::optional<int> run_epochs, run_retrain_window;
    bool run_retrain = false;
    run->add_option("--config", run_config_path, "config file (JSON or key = value lines)");
    run->add_option("--set", run_sets, "override any config key, e.g. --set training.epochs=5");
    run->add_option("--strategy", run_strategy, "simple|complex|ensemble|ph|adwin|eddm|eia");
    run->add_option("--csv", run_csv, "demand CSV stream source");
    run->add_option("--seed", run_seed, "experiment seed (required for synthetic streams)");
    run->add_option("--train-end", run_train_end, "last training hour (timestamp)");
    run->add_option("--train-hours", run_train_hours, "training segment length in hours");
    run->add_flag("--retrain", run_retrain, "retrain the network at each test-year start");
    run->add_option("--retrain-window", run_retrain_window, "training window in years");
    run->add_option("--year-length-hours", run_year_length,
                    "treat this many hours as one year (synthetic streams)");
    run->add_option("--epochs", run_epochs, "training epochs");
    run->add_option("--output", run_output, "output directory");

    // compare
    auto* compare = app.add_subcommand("compare", "rank report.json files from the same segment");
    std::vector<std::string> compare_paths;
    std::string compare_out;
    compare->add_option("reports", compare_paths, "two or more report.json paths")
        ->required()
        ->expected(-2);
    compare->add_option("--out", compare_out, "also write the table to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*generate) {
            if (!gen_start.empty()) {
                synth.start = HourStamp::parse(gen_start);
            }
            for (const std::string& spec : gen_events) {
                synth.events.push_back(parse_event_spec(spec));
            }
            return run_generate(synth, gen_out, gen_truth);
        }
        if (*ingest) {
            return run_ingest(ingest_in, ingest_out, ingest_options, ingest_top);
        }
        if (*run) {
            harness::ExperimentConfig config;
            if (!run_config_path.empty()) {
                config = harness::load_config(run_config_path);
            }
            if (!run_csv.empty()) {
                config.csv_path = run_csv;
                config.synthetic.reset();
            }
            if (!run_strategy.empty()) {
                config.strategy = harness::strategy_from_string(run_strategy);
            }
            if (run_seed) {
                config.seed = *run_seed;
                config.seed_set = true;
            }
            if (!run_train_end.empty()) {
                config.train_end = HourStamp::parse(run_train_end);
                config.train_hours.reset();
            }
            if (run_train_hours) {
                config.train_hours = *run_train_hours;
                config.train_end.reset();
            }
            if (run_retrain) {
                config.retrain = true;
            }
            if (run_retrain_window) {
                config.retrain_window_years = *run_retrain_window;
            }
            if (run_year_length) {
                config.year_length_hours = *run_year_length;
            }
            if (run_epochs) {
                config.training.epochs = *run_epochs;
            }
            if (!run_output.empty()) {
                config.output_dir = run_output;
            }
            for (const std::string& spec : run_sets) {
                const auto eq = spec.find('=');
                if (eq == std::string::npos) {
                    throw ConfigError("--set expects key=value, got '" + spec + "'");
                }
                harness::apply_override(config, spec.substr(0, eq), spec.substr(eq + 1));
            }
            return run_experiment_cmd(std::move(config));
        }
        if (*compare) {
            return run_compare(compare_paths, compare_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
