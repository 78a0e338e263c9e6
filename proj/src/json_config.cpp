#include "pulseaug/json_config.hpp"

#include <fstream>

namespace pulseaug {

namespace {

using nlohmann::json;

void require_object(const json& doc, const char* what) {
    if (!doc.is_object()) throw ConfigError(std::string(what) + " must be a JSON object");
}

double num_or(const json& doc, const char* key, double fallback) {
    if (!doc.contains(key)) return fallback;
    if (!doc.at(key).is_number())
        throw ConfigError(std::string("'") + key + "' must be a number");
    return doc.at(key).get<double>();
}

int int_or(const json& doc, const char* key, int fallback) {
    if (!doc.contains(key)) return fallback;
    if (!doc.at(key).is_number_integer())
        throw ConfigError(std::string("'") + key + "' must be an integer");
    return doc.at(key).get<int>();
}

bool bool_or(const json& doc, const char* key, bool fallback) {
    if (!doc.contains(key)) return fallback;
    if (!doc.at(key).is_boolean())
        throw ConfigError(std::string("'") + key + "' must be a boolean");
    return doc.at(key).get<bool>();
}

}  // namespace

nlohmann::json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    try {
        json doc;
        in >> doc;
        return doc;
    } catch (const json::exception& e) {
        throw ConfigError("JSON parse error in " + path.string() + ": " + e.what());
    }
}

PipelineSpec pipeline_spec_from_json(const nlohmann::json& doc) {
    require_object(doc, "pipeline spec");
    PipelineSpec spec;
    if (doc.contains("master_seed")) {
        if (!doc.at("master_seed").is_number_unsigned() &&
            !doc.at("master_seed").is_number_integer())
            throw ConfigError("'master_seed' must be an unsigned integer");
        spec.master_seed = doc.at("master_seed").get<std::uint64_t>();
    }
    spec.batch_consistent = bool_or(doc, "batch_consistent", false);

    if (!doc.contains("ops") || !doc.at("ops").is_array())
        throw ConfigError("pipeline spec requires an 'ops' array");
    for (const auto& entry : doc.at("ops")) {
        require_object(entry, "ops entry");
        OpSpec op;
        if (!entry.contains("name") || !entry.at("name").is_string())
            throw ConfigError("ops entry requires a string 'name'");
        op.name = entry.at("name").get<std::string>();
        op.prob = num_or(entry, "prob", 0.5);
        if (entry.contains("params")) {
            if (!entry.at("params").is_object())
                throw ConfigError("ops entry 'params' must be an object");
            op.params = entry.at("params");
        }
        spec.ops.push_back(std::move(op));
    }

    try {
        validate_pipeline_spec(spec);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("pipeline spec invalid: ") + e.what());
    }
    return spec;
}

nlohmann::json pipeline_spec_to_json(const PipelineSpec& spec) {
    json doc;
    doc["master_seed"] = spec.master_seed;
    doc["batch_consistent"] = spec.batch_consistent;
    doc["ops"] = json::array();
    for (const auto& op : spec.ops) {
        json entry;
        entry["name"] = op.name;
        entry["prob"] = op.prob;
        if (!op.params.empty()) entry["params"] = op.params;
        doc["ops"].push_back(std::move(entry));
    }
    return doc;
}

PreprocessConfig preprocess_config_from_json(const nlohmann::json& doc) {
    require_object(doc, "preprocess config");
    PreprocessConfig cfg;
    cfg.crop = int_or(doc, "crop", cfg.crop);
    cfg.resize = int_or(doc, "resize", cfg.resize);
    cfg.chunk_len = int_or(doc, "chunk_len", cfg.chunk_len);
    if (doc.contains("diff_mode")) {
        const auto& m = doc.at("diff_mode");
        if (m == "plain")
            cfg.diff_mode = DiffMode::Plain;
        else if (m == "normalized")
            cfg.diff_mode = DiffMode::Normalized;
        else
            throw ConfigError("'diff_mode' must be \"plain\" or \"normalized\"");
    }
    if (cfg.crop < 1) throw ConfigError("'crop' must be >= 1");
    if (cfg.resize < 1) throw ConfigError("'resize' must be >= 1");
    if (cfg.chunk_len < 2) throw ConfigError("'chunk_len' must be >= 2");
    return cfg;
}

FilterConfig filter_config_from_json(const nlohmann::json& doc) {
    require_object(doc, "filter config");
    FilterConfig cfg;
    cfg.order = int_or(doc, "order", cfg.order);
    cfg.low_hz = num_or(doc, "low_hz", cfg.low_hz);
    cfg.high_hz = num_or(doc, "high_hz", cfg.high_hz);
    cfg.zero_phase = bool_or(doc, "zero_phase", cfg.zero_phase);
    if (cfg.order < 1 || cfg.order > 8) throw ConfigError("'order' must lie in [1, 8]");
    if (!(cfg.low_hz > 0.0 && cfg.low_hz < cfg.high_hz))
        throw ConfigError("filter cutoffs must satisfy 0 < low_hz < high_hz");
    return cfg;
}

SynthJob synth_job_from_json(const nlohmann::json& doc) {
    require_object(doc, "synth config");
    SynthJob job;
    SynthConfig& cfg = job.base;
    cfg.hr_bpm = num_or(doc, "hr_bpm", cfg.hr_bpm);
    cfg.fps = num_or(doc, "fps", cfg.fps);
    cfg.duration_s = num_or(doc, "duration_s", cfg.duration_s);
    cfg.size = int_or(doc, "size", cfg.size);
    cfg.pulse_amplitude = num_or(doc, "pulse_amplitude", cfg.pulse_amplitude);
    cfg.motion_drift_px_per_s = num_or(doc, "motion_drift_px_per_s", 0.0);
    cfg.face_region = bool_or(doc, "face_region", false);

    if (doc.contains("base_color")) {
        const auto& c = doc.at("base_color");
        if (!c.is_array() || c.size() != 3)
            throw ConfigError("'base_color' must be an array of three numbers");
        for (int i = 0; i < 3; ++i) {
            if (!c[i].is_number()) throw ConfigError("'base_color' must hold numbers");
            cfg.base_color[static_cast<std::size_t>(i)] = c[i].get<double>();
        }
    }
    if (doc.contains("sensor_noise")) {
        const auto& n = doc.at("sensor_noise");
        require_object(n, "'sensor_noise'");
        cfg.sigma_s_sq = num_or(n, "sigma_s_sq", 0.0);
        cfg.sigma_c_sq = num_or(n, "sigma_c_sq", 0.0);
    }
    if (doc.contains("hr_bpm_range")) {
        const auto& r = doc.at("hr_bpm_range");
        if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number())
            throw ConfigError("'hr_bpm_range' must be a [low, high] array");
        const double lo = r[0].get<double>();
        const double hi = r[1].get<double>();
        if (!(lo <= hi) || lo < 45.0 || hi > 150.0)
            throw ConfigError("'hr_bpm_range' must be ordered and lie in [45, 150]");
        job.hr_range = {lo, hi};
    }

    try {
        SynthConfig probe = cfg;
        if (job.hr_range) probe.hr_bpm = job.hr_range->first;
        validate_synth_config(probe);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("synth config invalid: ") + e.what());
    }
    return job;
}

RunConfig run_config_from_json(const nlohmann::json& doc) {
    require_object(doc, "run config");
    RunConfig cfg;

    if (!doc.contains("pipeline")) throw ConfigError("run config requires 'pipeline'");
    if (doc.at("pipeline").is_string() && doc.at("pipeline") == "proposed")
        cfg.pipeline = proposed_pipeline_spec(0);
    else
        cfg.pipeline = pipeline_spec_from_json(doc.at("pipeline"));

    if (doc.contains("preprocess"))
        cfg.preprocess = preprocess_config_from_json(doc.at("preprocess"));
    if (doc.contains("filter")) cfg.filter = filter_config_from_json(doc.at("filter"));

    if (doc.contains("augment_stage")) {
        const auto& s = doc.at("augment_stage");
        if (s == "raw")
            cfg.augment_stage = AugmentStage::Raw;
        else if (s == "diff")
            cfg.augment_stage = AugmentStage::Diff;
        else
            throw ConfigError("'augment_stage' must be \"raw\" or \"diff\"");
    }

    if (!doc.contains("io") || !doc.at("io").is_object())
        throw ConfigError("run config requires an 'io' object");
    const auto& io = doc.at("io");
    if (!io.contains("input") || !io.at("input").is_string() || !io.contains("output") ||
        !io.at("output").is_string())
        throw ConfigError("'io' requires string 'input' and 'output' paths");
    cfg.input_dir = io.at("input").get<std::string>();
    cfg.output_dir = io.at("output").get<std::string>();
    if (!std::filesystem::is_directory(cfg.input_dir))
        throw ConfigError("input directory does not exist: " + cfg.input_dir.string());
    return cfg;
}

nlohmann::ordered_json metrics_to_json(const MetricsReport& report) {
    nlohmann::ordered_json doc;
    doc["mae"] = report.mae;
    doc["rmse"] = report.rmse;
    if (report.mape)
        doc["mape"] = *report.mape;
    else
        doc["mape"] = "undefined";
    if (report.pearson)
        doc["pearson"] = *report.pearson;
    else
        doc["pearson"] = "undefined";
    doc["n"] = report.n;
    return doc;
}

}  // namespace pulseaug
