#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "pulseaug/analysis.hpp"
#include "pulseaug/pipeline.hpp"
#include "pulseaug/preprocess.hpp"
#include "pulseaug/synth.hpp"

namespace pulseaug {

/// Invalid configuration or schema violation. Maps to exit code 2 in the
/// CLI.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses and validates a pipeline document:
/// {"master_seed": u64, "batch_consistent": bool, "ops": [{"name", "prob", "params"}...]}.
PipelineSpec pipeline_spec_from_json(const nlohmann::json& doc);
nlohmann::json pipeline_spec_to_json(const PipelineSpec& spec);

PreprocessConfig preprocess_config_from_json(const nlohmann::json& doc);
FilterConfig filter_config_from_json(const nlohmann::json& doc);

/// Synthesis job: the base recipe plus an optional per-sample heart-rate
/// range ("hr_bpm_range": [lo, hi] draws one rate per sample).
struct SynthJob {
    SynthConfig base;
    std::optional<std::pair<double, double>> hr_range;
};
SynthJob synth_job_from_json(const nlohmann::json& doc);

enum class AugmentStage { Raw, Diff };

/// Whole-workflow configuration consumed by the `run` subcommand.
struct RunConfig {
    PipelineSpec pipeline;
    PreprocessConfig preprocess;
    FilterConfig filter;
    AugmentStage augment_stage = AugmentStage::Raw;
    std::filesystem::path input_dir;
    std::filesystem::path output_dir;
};
RunConfig run_config_from_json(const nlohmann::json& doc);

/// Loads a JSON document from disk; throws ConfigError on parse failure.
nlohmann::json load_json_file(const std::filesystem::path& path);

/// Metrics as an ordered JSON object with explicit "undefined" markers
/// for mape/pearson when their preconditions failed.
nlohmann::ordered_json metrics_to_json(const MetricsReport& report);

}  // namespace pulseaug
