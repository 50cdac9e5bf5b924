#include "driftcast/harness/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "driftcast/errors.hpp"

namespace driftcast::harness {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
    throw ConfigError(what);
}

streams::DriftEventKind event_kind_from_string(const std::string& text) {
    if (text == "sudden_drop") return streams::DriftEventKind::SuddenDrop;
    if (text == "sudden_spike") return streams::DriftEventKind::SuddenSpike;
    if (text == "incremental_shift") return streams::DriftEventKind::IncrementalShift;
    bad("unknown drift event kind: " + text);
}

streams::SyntheticConfig& synthetic_of(ExperimentConfig& config) {
    if (!config.synthetic) {
        config.synthetic.emplace();
    }
    return *config.synthetic;
}

double to_real(const std::string& value, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double parsed = std::stod(value, &pos);
        if (pos != value.size()) bad("trailing characters in value for " + key);
        return parsed;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        bad("expected a number for " + key + ", got '" + value + "'");
    }
}

std::int64_t to_int(const std::string& value, const std::string& key) {
    try {
        std::size_t pos = 0;
        const long long parsed = std::stoll(value, &pos);
        if (pos != value.size()) bad("trailing characters in value for " + key);
        return parsed;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        bad("expected an integer for " + key + ", got '" + value + "'");
    }
}

bool to_bool(const std::string& value, const std::string& key) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    bad("expected a boolean for " + key + ", got '" + value + "'");
}

HourStamp to_stamp(const std::string& value, const std::string& key) {
    const auto ts = HourStamp::try_parse(value);
    if (!ts) bad("expected a timestamp for " + key + ", got '" + value + "'");
    return *ts;
}

void load_synthetic_json(const json& doc, streams::SyntheticConfig& synth) {
    if (doc.contains("num_hours")) synth.num_hours = doc.at("num_hours").get<std::int64_t>();
    if (doc.contains("num_zones")) synth.num_zones = doc.at("num_zones").get<int>();
    if (doc.contains("base_level")) synth.base_level = doc.at("base_level").get<double>();
    if (doc.contains("daily_amplitude"))
        synth.daily_amplitude = doc.at("daily_amplitude").get<double>();
    if (doc.contains("weekly_amplitude"))
        synth.weekly_amplitude = doc.at("weekly_amplitude").get<double>();
    if (doc.contains("noise_std")) synth.noise_std = doc.at("noise_std").get<double>();
    if (doc.contains("trend_per_hour"))
        synth.trend_per_hour = doc.at("trend_per_hour").get<double>();
    if (doc.contains("start")) synth.start = to_stamp(doc.at("start").get<std::string>(), "start");
    if (doc.contains("events")) {
        for (const json& entry : doc.at("events")) {
            streams::DriftEvent event;
            event.kind = event_kind_from_string(entry.at("kind").get<std::string>());
            event.start_hour = entry.at("start_hour").get<std::int64_t>();
            event.end_hour = entry.at("end_hour").get<std::int64_t>();
            event.magnitude = entry.at("magnitude").get<double>();
            if (entry.contains("affected_zones")) {
                event.affected_zones = entry.at("affected_zones").get<std::vector<int>>();
            }
            synth.events.push_back(std::move(event));
        }
    }
}

void load_json(const json& doc, ExperimentConfig& config) {
    if (doc.contains("stream")) {
        const json& stream = doc.at("stream");
        if (stream.contains("csv")) config.csv_path = stream.at("csv").get<std::string>();
        if (stream.contains("synthetic")) {
            load_synthetic_json(stream.at("synthetic"), synthetic_of(config));
        }
    }
    if (doc.contains("strategy")) {
        config.strategy = strategy_from_string(doc.at("strategy").get<std::string>());
    }
    if (doc.contains("training")) {
        const json& t = doc.at("training");
        auto& tc = config.training;
        if (t.contains("learning_rate")) tc.learning_rate = t.at("learning_rate").get<double>();
        if (t.contains("epochs")) tc.epochs = t.at("epochs").get<int>();
        if (t.contains("batch_size")) tc.batch_size = t.at("batch_size").get<int>();
        if (t.contains("hidden_dim")) tc.hidden_dim = t.at("hidden_dim").get<std::size_t>();
        if (t.contains("dropout_rate")) tc.dropout_rate = t.at("dropout_rate").get<double>();
        if (t.contains("target_scaling")) {
            const std::string mode = t.at("target_scaling").get<std::string>();
            if (mode == "standardize") tc.target_scaling = models::TargetScaling::Standardize;
            else if (mode == "none") tc.target_scaling = models::TargetScaling::None;
            else bad("unknown target_scaling: " + mode);
        }
        if (t.contains("standardize_features"))
            tc.standardize_features = t.at("standardize_features").get<bool>();
    }
    if (doc.contains("trace_window"))
        config.trace_window = doc.at("trace_window").get<std::size_t>();
    if (doc.contains("detectors")) {
        const json& d = doc.at("detectors");
        if (d.contains("ph")) {
            const json& ph = d.at("ph");
            if (ph.contains("delta")) config.detectors.ph.delta = ph.at("delta").get<double>();
            if (ph.contains("lambda")) config.detectors.ph.lambda = ph.at("lambda").get<double>();
            if (ph.contains("alpha")) config.detectors.ph.alpha = ph.at("alpha").get<double>();
        }
        if (d.contains("adwin")) {
            const json& aw = d.at("adwin");
            if (aw.contains("delta_conf"))
                config.detectors.adwin.delta_conf = aw.at("delta_conf").get<double>();
            if (aw.contains("max_buckets"))
                config.detectors.adwin.max_buckets = aw.at("max_buckets").get<int>();
            if (aw.contains("error_cap"))
                config.detectors.adwin_error_cap = aw.at("error_cap").get<double>();
        }
        if (d.contains("eddm")) {
            const json& ed = d.at("eddm");
            if (ed.contains("beta_warn"))
                config.detectors.eddm.beta_warn = ed.at("beta_warn").get<double>();
            if (ed.contains("beta_drift"))
                config.detectors.eddm.beta_drift = ed.at("beta_drift").get<double>();
            if (ed.contains("min_errors"))
                config.detectors.eddm.min_errors = ed.at("min_errors").get<int>();
            if (ed.contains("quantile"))
                config.detectors.binarizer_quantile = ed.at("quantile").get<double>();
        }
    }
    if (doc.contains("train_end"))
        config.train_end = to_stamp(doc.at("train_end").get<std::string>(), "train_end");
    if (doc.contains("train_hours"))
        config.train_hours = doc.at("train_hours").get<std::int64_t>();
    if (doc.contains("retrain")) config.retrain = doc.at("retrain").get<bool>();
    if (doc.contains("retrain_window_years"))
        config.retrain_window_years = doc.at("retrain_window_years").get<int>();
    if (doc.contains("year_length_hours"))
        config.year_length_hours = doc.at("year_length_hours").get<std::int64_t>();
    if (doc.contains("output_dir")) config.output_dir = doc.at("output_dir").get<std::string>();
    if (doc.contains("seed")) {
        config.seed = doc.at("seed").get<std::uint64_t>();
        config.seed_set = true;
    }
}

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

} // namespace

std::string_view to_string(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::SimpleOnly: return "simple";
        case StrategyKind::ComplexOnly: return "complex";
        case StrategyKind::EnsembleEwma: return "ensemble";
        case StrategyKind::PageHinkleySwitch: return "ph";
        case StrategyKind::AdwinSwitch: return "adwin";
        case StrategyKind::EddmSwitch: return "eddm";
        case StrategyKind::Eia: return "eia";
    }
    return "?";
}

StrategyKind strategy_from_string(std::string_view text) {
    if (text == "simple") return StrategyKind::SimpleOnly;
    if (text == "complex") return StrategyKind::ComplexOnly;
    if (text == "ensemble") return StrategyKind::EnsembleEwma;
    if (text == "ph") return StrategyKind::PageHinkleySwitch;
    if (text == "adwin") return StrategyKind::AdwinSwitch;
    if (text == "eddm") return StrategyKind::EddmSwitch;
    if (text == "eia") return StrategyKind::Eia;
    bad("unknown strategy: '" + std::string(text) +
        "' (expected simple|complex|ensemble|ph|adwin|eddm|eia)");
}

void apply_override(ExperimentConfig& config, const std::string& key, const std::string& value) {
    if (key == "stream.csv") {
        config.csv_path = value;
    } else if (key == "stream.synthetic.num_hours") {
        synthetic_of(config).num_hours = to_int(value, key);
    } else if (key == "stream.synthetic.num_zones") {
        synthetic_of(config).num_zones = static_cast<int>(to_int(value, key));
    } else if (key == "stream.synthetic.base_level") {
        synthetic_of(config).base_level = to_real(value, key);
    } else if (key == "stream.synthetic.daily_amplitude") {
        synthetic_of(config).daily_amplitude = to_real(value, key);
    } else if (key == "stream.synthetic.weekly_amplitude") {
        synthetic_of(config).weekly_amplitude = to_real(value, key);
    } else if (key == "stream.synthetic.noise_std") {
        synthetic_of(config).noise_std = to_real(value, key);
    } else if (key == "stream.synthetic.trend_per_hour") {
        synthetic_of(config).trend_per_hour = to_real(value, key);
    } else if (key == "stream.synthetic.start") {
        synthetic_of(config).start = to_stamp(value, key);
    } else if (key == "strategy") {
        config.strategy = strategy_from_string(value);
    } else if (key == "training.learning_rate") {
        config.training.learning_rate = to_real(value, key);
    } else if (key == "training.epochs") {
        config.training.epochs = static_cast<int>(to_int(value, key));
    } else if (key == "training.batch_size") {
        config.training.batch_size = static_cast<int>(to_int(value, key));
    } else if (key == "training.hidden_dim") {
        config.training.hidden_dim = static_cast<std::size_t>(to_int(value, key));
    } else if (key == "training.dropout_rate") {
        config.training.dropout_rate = to_real(value, key);
    } else if (key == "training.target_scaling") {
        if (value == "standardize") config.training.target_scaling = models::TargetScaling::Standardize;
        else if (value == "none") config.training.target_scaling = models::TargetScaling::None;
        else bad("unknown target_scaling: " + value);
    } else if (key == "training.standardize_features") {
        config.training.standardize_features = to_bool(value, key);
    } else if (key == "trace_window") {
        config.trace_window = static_cast<std::size_t>(to_int(value, key));
    } else if (key == "detectors.ph.delta") {
        config.detectors.ph.delta = to_real(value, key);
    } else if (key == "detectors.ph.lambda") {
        config.detectors.ph.lambda = to_real(value, key);
    } else if (key == "detectors.ph.alpha") {
        config.detectors.ph.alpha = to_real(value, key);
    } else if (key == "detectors.adwin.delta_conf") {
        config.detectors.adwin.delta_conf = to_real(value, key);
    } else if (key == "detectors.adwin.max_buckets") {
        config.detectors.adwin.max_buckets = static_cast<int>(to_int(value, key));
    } else if (key == "detectors.adwin.error_cap") {
        config.detectors.adwin_error_cap = to_real(value, key);
    } else if (key == "detectors.eddm.beta_warn") {
        config.detectors.eddm.beta_warn = to_real(value, key);
    } else if (key == "detectors.eddm.beta_drift") {
        config.detectors.eddm.beta_drift = to_real(value, key);
    } else if (key == "detectors.eddm.min_errors") {
        config.detectors.eddm.min_errors = static_cast<int>(to_int(value, key));
    } else if (key == "detectors.eddm.quantile") {
        config.detectors.binarizer_quantile = to_real(value, key);
    } else if (key == "train_end") {
        config.train_end = to_stamp(value, key);
    } else if (key == "train_hours") {
        config.train_hours = to_int(value, key);
    } else if (key == "retrain") {
        config.retrain = to_bool(value, key);
    } else if (key == "retrain_window_years") {
        config.retrain_window_years = static_cast<int>(to_int(value, key));
    } else if (key == "year_length_hours") {
        config.year_length_hours = to_int(value, key);
    } else if (key == "output_dir") {
        config.output_dir = value;
    } else if (key == "seed") {
        config.seed = static_cast<std::uint64_t>(to_int(value, key));
        config.seed_set = true;
    } else {
        bad("unknown config key: " + key);
    }
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file: " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    ExperimentConfig config;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::exception& e) {
            bad("invalid JSON in " + path.string() + ": " + e.what());
        }
        try {
            load_json(doc, config);
        } catch (const json::exception& e) {
            bad("bad config value in " + path.string() + ": " + e.what());
        }
        return config;
    }

    std::istringstream lines(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') {
            continue;
        }
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            bad(path.string() + ":" + std::to_string(line_no) + ": expected key = value");
        }
        apply_override(config, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    return config;
}

void validate_config(const ExperimentConfig& config) {
    const bool has_synth = config.synthetic.has_value();
    const bool has_csv = config.csv_path.has_value();
    if (has_synth == has_csv) {
        bad("exactly one stream source required (stream.synthetic.* or stream.csv)");
    }
    if (config.train_end.has_value() == config.train_hours.has_value()) {
        bad("exactly one of train_end / train_hours required");
    }
    if (config.train_hours && *config.train_hours < 1) {
        bad("train_hours must be positive");
    }
    if (config.trace_window < 1) {
        bad("trace_window must be at least 1");
    }
    if (config.retrain_window_years < 1) {
        bad("retrain_window_years must be at least 1");
    }
    if (config.year_length_hours && *config.year_length_hours < 1) {
        bad("year_length_hours must be positive");
    }
    if (has_synth && !config.seed_set) {
        bad("synthetic runs require an explicit seed");
    }
}

} // namespace driftcast::harness
