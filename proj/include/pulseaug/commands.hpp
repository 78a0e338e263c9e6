#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pulseaug/analysis.hpp"
#include "pulseaug/json_config.hpp"
#include "pulseaug/pipeline.hpp"
#include "pulseaug/preprocess.hpp"

namespace pulseaug::cmd {

/// Shared by every subcommand; all randomness flows from `seed`.
struct SynthOptions {
    std::filesystem::path config;
    std::filesystem::path out;
    int count = 1;
    std::uint64_t seed = 0;
    int jobs = 1;
};

struct AugmentOptions {
    std::string pipeline;  // path to a pipeline JSON, or the literal "proposed"
    std::filesystem::path in;
    std::filesystem::path out;
    std::optional<std::uint64_t> seed;  // overrides the spec's master_seed
    bool batch_consistent = false;
    int jobs = 1;
};

struct PreprocessOptions {
    std::filesystem::path config;  // optional; defaults when empty
    std::filesystem::path in;
    std::filesystem::path out;
    int jobs = 1;
};

enum class HrSource { Video, Trace, Meta };

struct HrOptions {
    std::filesystem::path in;
    std::filesystem::path out;
    HrSource source = HrSource::Video;
    bool zero_phase = true;
    int pad_factor = 1;
    bool hann = false;
    int chunk_len = 180;
    double low_hz = 0.75;
    double high_hz = 2.5;
    int jobs = 1;
};

struct EvalOptions {
    std::filesystem::path pred;
    std::filesystem::path ref;
    std::filesystem::path out;                      // metrics.json
    std::optional<std::filesystem::path> out_csv;   // optional CSV twin
};

struct SweepOptions {
    std::filesystem::path ops;
    std::filesystem::path dataset;
    std::filesystem::path out;  // square pivot CSV; a .long.csv twin is written next to it
    SweepMode mode = SweepMode::Single;
    std::uint64_t seed = 0;
    AugmentStage augment_stage = AugmentStage::Raw;
    int chunk_len = 180;
    int jobs = 1;
};

struct RunOptions {
    std::filesystem::path config;
    std::optional<std::uint64_t> seed;
    int jobs = 1;
};

void run_synth(const SynthOptions& opts);
void run_augment(const AugmentOptions& opts);
void run_preprocess(const PreprocessOptions& opts);
void run_hr(const HrOptions& opts);
void run_eval(const EvalOptions& opts);
void run_sweep(const SweepOptions& opts);
void run_run(const RunOptions& opts);

/// One hr.csv row.
struct HrRow {
    std::string sample_id;
    int chunk_index = 0;
    double bpm = 0.0;
};

std::vector<HrRow> read_hr_csv(const std::filesystem::path& path);

/// Per-chunk heart-rate MAE of an augmented dataset against each
/// sample's reference_hr, using the extractor -> bandpass -> spectrum
/// chain. This is the evaluator the sweep subcommand wires in.
double oracle_dataset_mae(const std::vector<Sample>& dataset, int chunk_len,
                          const FilterConfig& filter, const HrBand& band);

/// Moves a sample into the difference domain used by --augment-stage diff:
/// frame differences rescaled into [0, 1] (0.5 = "no change") with the
/// trace trimmed to match. Pipelines over this domain may contain only
/// geometric and signal operators.
Sample to_diff_domain(const Sample& sample, DiffMode mode);

}  // namespace pulseaug::cmd
