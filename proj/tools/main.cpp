#include <exception>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "pulseaug/commands.hpp"
#include "pulseaug/sample_io.hpp"

namespace {

int default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Augmentation and evaluation engine for paired pulse videos and waveforms"};
    app.require_subcommand(1);

    using namespace pulseaug;

    cmd::SynthOptions synth;
    synth.jobs = default_jobs();
    auto* synth_cmd = app.add_subcommand("synth", "Generate synthetic pulse-video samples");
    synth_cmd->add_option("--config", synth.config, "Synthesis config JSON")->required();
    synth_cmd->add_option("--out", synth.out, "Output dataset directory")->required();
    synth_cmd->add_option("--count", synth.count, "Number of samples")->required();
    synth_cmd->add_option("--seed", synth.seed, "Master seed");
    synth_cmd->add_option("--jobs", synth.jobs, "Worker threads");

    cmd::AugmentOptions augment;
    augment.jobs = default_jobs();
    std::uint64_t augment_seed = 0;
    auto* augment_cmd = app.add_subcommand("augment", "Apply an augmentation pipeline");
    augment_cmd->add_option("--pipeline", augment.pipeline,
                            "Pipeline JSON path, or 'proposed' for the default 8-op sequence")
        ->required();
    augment_cmd->add_option("--in", augment.in, "Input dataset directory")->required();
    augment_cmd->add_option("--out", augment.out, "Output dataset directory")->required();
    auto* augment_seed_opt =
        augment_cmd->add_option("--seed", augment_seed, "Master seed (overrides the spec)");
    augment_cmd->add_flag("--batch-consistent", augment.batch_consistent,
                          "Share drawn strengths across all samples");
    augment_cmd->add_option("--jobs", augment.jobs, "Worker threads");

    cmd::PreprocessOptions preprocess;
    preprocess.jobs = default_jobs();
    auto* preprocess_cmd =
        app.add_subcommand("preprocess", "Crop, resize, difference and chunk samples");
    preprocess_cmd->add_option("--config", preprocess.config, "Preprocess config JSON");
    preprocess_cmd->add_option("--in", preprocess.in, "Input dataset directory")->required();
    preprocess_cmd->add_option("--out", preprocess.out, "Output dataset directory")->required();
    preprocess_cmd->add_option("--jobs", preprocess.jobs, "Worker threads");

    cmd::HrOptions hr;
    hr.jobs = default_jobs();
    std::string hr_source = "video";
    bool no_zero_phase = false;
    auto* hr_cmd = app.add_subcommand("hr", "Estimate per-chunk heart rates to CSV");
    hr_cmd->add_option("--in", hr.in, "Input dataset directory")->required();
    hr_cmd->add_option("--out", hr.out, "Output CSV path")->required();
    hr_cmd->add_option("--source", hr_source, "Waveform source: video | trace | meta")
        ->check(CLI::IsMember({"video", "trace", "meta"}));
    hr_cmd->add_flag("--no-zero-phase", no_zero_phase, "Single forward filter pass");
    hr_cmd->add_option("--pad-factor", hr.pad_factor, "FFT zero-padding factor");
    hr_cmd->add_flag("--hann", hr.hann, "Apply a Hann window before the FFT");
    hr_cmd->add_option("--chunk-len", hr.chunk_len, "Frames per chunk");
    hr_cmd->add_option("--low-hz", hr.low_hz, "Band low edge (Hz)");
    hr_cmd->add_option("--high-hz", hr.high_hz, "Band high edge (Hz)");
    hr_cmd->add_option("--jobs", hr.jobs, "Worker threads");

    cmd::EvalOptions eval;
    std::string eval_csv;
    auto* eval_cmd = app.add_subcommand("eval", "Score predicted vs reference heart rates");
    eval_cmd->add_option("--pred", eval.pred, "Predicted hr.csv")->required();
    eval_cmd->add_option("--ref", eval.ref, "Reference hr.csv")->required();
    eval_cmd->add_option("--out", eval.out, "Output metrics JSON")->required();
    eval_cmd->add_option("--out-csv", eval_csv, "Optional metrics CSV");

    cmd::SweepOptions sweep;
    sweep.jobs = default_jobs();
    std::string sweep_mode = "single";
    std::string sweep_stage = "raw";
    auto* sweep_cmd =
        app.add_subcommand("sweep", "Evaluate operators individually or in ordered pairs");
    sweep_cmd->add_option("--ops", sweep.ops, "Operator list JSON")->required();
    sweep_cmd->add_option("--mode", sweep_mode, "single | pairwise")
        ->check(CLI::IsMember({"single", "pairwise"}));
    sweep_cmd->add_option("--dataset", sweep.dataset, "Dataset directory")->required();
    sweep_cmd->add_option("--out", sweep.out, "Output matrix CSV")->required();
    sweep_cmd->add_option("--seed", sweep.seed, "Master seed");
    sweep_cmd->add_option("--augment-stage", sweep_stage, "Augment raw or difference frames")
        ->check(CLI::IsMember({"raw", "diff"}));
    sweep_cmd->add_option("--chunk-len", sweep.chunk_len, "Frames per evaluation chunk");
    sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads");

    cmd::RunOptions run;
    run.jobs = default_jobs();
    std::uint64_t run_seed = 0;
    auto* run_cmd = app.add_subcommand("run", "Full augment -> preprocess -> hr -> eval chain");
    run_cmd->add_option("--config", run.config, "Run config JSON")->required();
    auto* run_seed_opt = run_cmd->add_option("--seed", run_seed, "Master seed override");
    run_cmd->add_option("--jobs", run.jobs, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*synth_cmd) cmd::run_synth(synth);
        if (*augment_cmd) {
            if (augment_seed_opt->count() > 0) augment.seed = augment_seed;
            cmd::run_augment(augment);
        }
        if (*preprocess_cmd) cmd::run_preprocess(preprocess);
        if (*hr_cmd) {
            hr.zero_phase = !no_zero_phase;
            hr.source = hr_source == "video"  ? cmd::HrSource::Video
                        : hr_source == "trace" ? cmd::HrSource::Trace
                                                : cmd::HrSource::Meta;
            cmd::run_hr(hr);
        }
        if (*eval_cmd) {
            if (!eval_csv.empty()) eval.out_csv = eval_csv;
            cmd::run_eval(eval);
        }
        if (*sweep_cmd) {
            sweep.mode = sweep_mode == "single" ? pulseaug::SweepMode::Single
                                                : pulseaug::SweepMode::Pairwise;
            sweep.augment_stage =
                sweep_stage == "raw" ? AugmentStage::Raw : AugmentStage::Diff;
            cmd::run_sweep(sweep);
        }
        if (*run_cmd) {
            if (run_seed_opt->count() > 0) run.seed = run_seed;
            cmd::run_run(run);
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const PipelineError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
