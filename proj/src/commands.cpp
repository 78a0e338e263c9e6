#include "pulseaug/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "pulseaug/parallel.hpp"
#include "pulseaug/rng.hpp"
#include "pulseaug/sample_io.hpp"
#include "pulseaug/synth.hpp"
#include "pulseaug/validate.hpp"

namespace pulseaug::cmd {

namespace fs = std::filesystem;

namespace {

constexpr const char* kStageSynth = "synth";
constexpr const char* kStageSynthHr = "synth-hr";

std::string format_double(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot open for writing: " + path.string());
    out << text;
    if (!out) throw FormatError("short write: " + path.string());
}

void check_distinct_dirs(const fs::path& in, const fs::path& out) {
    std::error_code ec;
    if (fs::exists(out) && fs::equivalent(in, out, ec))
        throw ConfigError("input and output directories must differ");
}

PipelineSpec load_pipeline(const std::string& pipeline, std::optional<std::uint64_t> seed,
                           bool batch_consistent) {
    PipelineSpec spec = pipeline == "proposed"
                            ? proposed_pipeline_spec(seed.value_or(0))
                            : pipeline_spec_from_json(load_json_file(pipeline));
    if (seed) spec.master_seed = *seed;
    if (batch_consistent) spec.batch_consistent = true;
    return spec;
}

std::vector<HrRow> hr_rows_for_sample(const Sample& sample, const std::string& id,
                                      const HrOptions& opts) {
    std::vector<HrRow> rows;
    const int chunks = sample.clip.frames / opts.chunk_len;

    if (opts.source == HrSource::Meta) {
        if (!sample.reference_hr)
            throw FormatError("sample '" + id + "' carries no reference_hr");
        for (int k = 0; k < chunks; ++k) rows.push_back({id, k, *sample.reference_hr});
        return rows;
    }

    const SignalTrace trace =
        opts.source == HrSource::Video ? oracle_extract(sample) : sample.trace;
    FilterConfig filter;
    filter.low_hz = opts.low_hz;
    filter.high_hz = opts.high_hz;
    filter.zero_phase = opts.zero_phase;
    const HrBand band{opts.low_hz, opts.high_hz};
    const SpectrumOptions spectrum{opts.pad_factor, opts.hann};

    for (int k = 0; k < chunks; ++k) {
        SignalTrace window;
        window.fps = trace.fps;
        window.values.assign(
            trace.values.begin() + static_cast<std::ptrdiff_t>(k) * opts.chunk_len,
            trace.values.begin() + static_cast<std::ptrdiff_t>(k + 1) * opts.chunk_len);
        const SignalTrace filtered = butterworth_bandpass(window, filter);
        rows.push_back({id, k, estimate_hr_fft(filtered, band, spectrum).bpm});
    }
    return rows;
}

void write_hr_csv(const fs::path& path, const std::vector<HrRow>& rows) {
    std::ostringstream out;
    out << "sample_id,chunk_index,bpm\n";
    for (const auto& row : rows)
        out << row.sample_id << ',' << row.chunk_index << ',' << format_double(row.bpm, 6)
            << '\n';
    write_text_file(path, out.str());
}

VideoClip rescale_clip(const VideoClip& clip, double scale, double offset) {
    VideoClip out = clip;
    for (float& v : out.data)
        v = static_cast<float>(scale * static_cast<double>(v) + offset);
    return out;
}

void require_diff_compatible(const std::vector<OpSpec>& ops) {
    for (const auto& op : ops) {
        const bool geometric = op.name == "rotate" || op.name == "translate_x" ||
                               op.name == "translate_y" || op.name == "shear_x" ||
                               op.name == "shear_y" || op.name == "flip";
        if (operator_domain(op.name) == OpDomain::Video && !geometric)
            throw ConfigError("operator '" + op.name +
                              "' is not applicable to difference frames "
                              "(only geometric and signal operators are)");
    }
}

// Difference frames encode "no change" as 0.5; geometric fill must match
// unless the spec overrides it.
std::vector<OpSpec> with_diff_fill(std::vector<OpSpec> ops) {
    for (auto& op : ops)
        if (operator_domain(op.name) == OpDomain::Video && !op.params.contains("fill"))
            op.params["fill"] = 0.5;
    return ops;
}

}  // namespace

Sample to_diff_domain(const Sample& sample, DiffMode mode) {
    Sample out = sample;
    out.clip = rescale_clip(difference_frames(sample.clip, mode), 0.5, 0.5);
    out.trace.values.resize(out.clip.frames);
    return out;
}

void run_synth(const SynthOptions& opts) {
    if (opts.count < 1) throw ConfigError("--count must be >= 1");
    const SynthJob job = synth_job_from_json(load_json_file(opts.config));
    fs::create_directories(opts.out);

    parallel_for(static_cast<std::size_t>(opts.count), opts.jobs, [&](std::size_t i) {
        SynthConfig cfg = job.base;
        if (job.hr_range) {
            SeededRng hr_rng(opts.seed, kStageSynthHr, i, 0);
            cfg.hr_bpm = hr_rng.uniform(job.hr_range->first, job.hr_range->second);
        }
        char id[32];
        std::snprintf(id, sizeof(id), "synth-%04zu", i);
        SeededRng rng(opts.seed, kStageSynth, i, 0);
        const Sample sample = generate_sample(cfg, rng, id);
        write_sample(sample, opts.out / id);
    });
}

void run_augment(const AugmentOptions& opts) {
    check_distinct_dirs(opts.in, opts.out);
    const PipelineSpec spec = load_pipeline(opts.pipeline, opts.seed, opts.batch_consistent);
    const auto names = list_sample_dirs(opts.in);
    fs::create_directories(opts.out);

    parallel_for(names.size(), opts.jobs, [&](std::size_t i) {
        Sample sample = read_sample(opts.in / names[i]);
        Sample augmented = apply_pipeline(sample, spec, i);
        augmented.id += "-aug";
        write_sample(augmented, opts.out / augmented.id);
    });
}

namespace {

void preprocess_dir(const fs::path& in, const fs::path& out, const PreprocessConfig& cfg,
                    int jobs) {
    check_distinct_dirs(in, out);
    const auto names = list_sample_dirs(in);
    fs::create_directories(out);

    parallel_for(names.size(), jobs, [&](std::size_t i) {
        const Sample sample = read_sample(in / names[i]);
        for (const Sample& piece : preprocess_sample(sample, cfg))
            write_sample(piece, out / piece.id);
    });
}

}  // namespace

void run_preprocess(const PreprocessOptions& opts) {
    PreprocessConfig cfg;
    if (!opts.config.empty()) cfg = preprocess_config_from_json(load_json_file(opts.config));
    preprocess_dir(opts.in, opts.out, cfg, opts.jobs);
}

void run_hr(const HrOptions& opts) {
    if (opts.chunk_len < 2) throw ConfigError("--chunk-len must be >= 2");
    if (opts.pad_factor < 1) throw ConfigError("--pad-factor must be >= 1");
    const auto names = list_sample_dirs(opts.in);

    std::vector<std::vector<HrRow>> per_sample(names.size());
    parallel_for(names.size(), opts.jobs, [&](std::size_t i) {
        const Sample sample = read_sample(opts.in / names[i]);
        per_sample[i] = hr_rows_for_sample(sample, sample.id, opts);
    });

    std::vector<HrRow> rows;
    for (auto& group : per_sample)
        rows.insert(rows.end(), group.begin(), group.end());
    write_hr_csv(opts.out, rows);
}

std::vector<HrRow> read_hr_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open: " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "sample_id,chunk_index,bpm")
        throw FormatError("bad header in " + path.string() +
                          " (expected \"sample_id,chunk_index,bpm\")");
    std::vector<HrRow> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw FormatError(path.string() + ":" + std::to_string(lineno) +
                              ": expected 3 comma-separated fields");
        HrRow row;
        row.sample_id = line.substr(0, c1);
        try {
            row.chunk_index = std::stoi(line.substr(c1 + 1, c2 - c1 - 1));
            row.bpm = std::stod(line.substr(c2 + 1));
        } catch (const std::exception&) {
            throw FormatError(path.string() + ":" + std::to_string(lineno) +
                              ": malformed numeric field");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void run_eval(const EvalOptions& opts) {
    const auto pred_rows = read_hr_csv(opts.pred);
    const auto ref_rows = read_hr_csv(opts.ref);

    std::map<std::pair<std::string, int>, double> pred_map, ref_map;
    for (const auto& r : pred_rows) pred_map[{r.sample_id, r.chunk_index}] = r.bpm;
    for (const auto& r : ref_rows) ref_map[{r.sample_id, r.chunk_index}] = r.bpm;
    if (pred_map.size() != pred_rows.size() || ref_map.size() != ref_rows.size())
        throw FormatError("duplicate (sample_id, chunk_index) rows");
    if (pred_map.size() != ref_map.size())
        throw FormatError("row count mismatch: " + std::to_string(pred_map.size()) +
                          " predictions vs " + std::to_string(ref_map.size()) + " references");

    std::vector<double> pred, ref;
    for (const auto& [key, bpm] : pred_map) {
        const auto it = ref_map.find(key);
        if (it == ref_map.end())
            throw FormatError("reference missing row for sample '" + key.first + "' chunk " +
                              std::to_string(key.second));
        pred.push_back(bpm);
        ref.push_back(it->second);
    }

    MetricsReport report;
    try {
        report = compute_metrics(pred, ref);
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("cannot evaluate: ") + e.what());
    }
    write_text_file(opts.out, metrics_to_json(report).dump(2) + "\n");

    if (opts.out_csv) {
        std::ostringstream csv;
        csv << "mae,rmse,mape,pearson,n\n";
        csv << format_double(report.mae, 9) << ',' << format_double(report.rmse, 9) << ','
            << (report.mape ? format_double(*report.mape, 9) : "undefined") << ','
            << (report.pearson ? format_double(*report.pearson, 9) : "undefined") << ','
            << report.n << '\n';
        write_text_file(*opts.out_csv, csv.str());
    }
}

double oracle_dataset_mae(const std::vector<Sample>& dataset, int chunk_len,
                          const FilterConfig& filter, const HrBand& band) {
    double abs_sum = 0.0;
    std::size_t n = 0;
    for (const Sample& sample : dataset) {
        if (!sample.reference_hr)
            throw FormatError("sample '" + sample.id + "' carries no reference_hr");
        const SignalTrace trace = oracle_extract(sample);
        const int chunks = sample.clip.frames / chunk_len;
        for (int k = 0; k < chunks; ++k) {
            SignalTrace window;
            window.fps = trace.fps;
            window.values.assign(
                trace.values.begin() + static_cast<std::ptrdiff_t>(k) * chunk_len,
                trace.values.begin() + static_cast<std::ptrdiff_t>(k + 1) * chunk_len);
            const double bpm =
                estimate_hr_fft(butterworth_bandpass(window, filter), band).bpm;
            abs_sum += std::abs(bpm - *sample.reference_hr);
            ++n;
        }
    }
    if (n == 0) throw FormatError("dataset clips are shorter than the chunk length");
    return abs_sum / static_cast<double>(n);
}

namespace {

std::vector<OpSpec> ops_from_json_doc(const nlohmann::json& doc) {
    const nlohmann::json* arr = nullptr;
    if (doc.is_array())
        arr = &doc;
    else if (doc.is_object() && doc.contains("ops") && doc.at("ops").is_array())
        arr = &doc.at("ops");
    else
        throw ConfigError("ops document must be an array or an object with an 'ops' array");

    nlohmann::json wrapper;
    wrapper["ops"] = *arr;
    return pipeline_spec_from_json(wrapper).ops;
}

void write_sweep_csvs(const fs::path& out, const SweepResult& result, SweepMode mode) {
    std::ostringstream pivot, longform;
    longform << "row_op,col_op,mae\n";

    if (mode == SweepMode::Single) {
        pivot << "op,mae\n";
        for (std::size_t i = 0; i < result.op_names.size(); ++i) {
            pivot << result.op_names[i] << ',' << format_double(result.single[i], 3) << '\n';
            longform << result.op_names[i] << ',' << result.op_names[i] << ','
                     << format_double(result.single[i], 9) << '\n';
        }
    } else {
        pivot << "op";
        for (const auto& name : result.op_names) pivot << ',' << name;
        pivot << '\n';
        for (std::size_t i = 0; i < result.op_names.size(); ++i) {
            pivot << result.op_names[i];
            for (std::size_t j = 0; j < result.op_names.size(); ++j) {
                pivot << ',' << format_double(result.pairwise[i][j], 3);
                longform << result.op_names[i] << ',' << result.op_names[j] << ','
                         << format_double(result.pairwise[i][j], 9) << '\n';
            }
            pivot << '\n';
        }
    }

    write_text_file(out, pivot.str());
    fs::path long_path = out;
    long_path.replace_extension(".long.csv");
    write_text_file(long_path, longform.str());
}

}  // namespace

void run_sweep(const SweepOptions& opts) {
    if (opts.chunk_len < 2) throw ConfigError("--chunk-len must be >= 2");
    std::vector<OpSpec> ops = ops_from_json_doc(load_json_file(opts.ops));

    const auto names = list_sample_dirs(opts.dataset);
    if (names.empty()) throw FormatError("dataset directory holds no sample containers");
    std::vector<Sample> dataset(names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
        dataset[i] = read_sample(opts.dataset / names[i]);

    if (opts.augment_stage == AugmentStage::Diff) {
        require_diff_compatible(ops);
        ops = with_diff_fill(std::move(ops));
        for (Sample& sample : dataset) sample = to_diff_domain(sample, DiffMode::Plain);
    }

    const FilterConfig filter;
    const HrBand band;
    const auto evaluator = [&](const std::vector<Sample>& augmented) {
        return oracle_dataset_mae(augmented, opts.chunk_len, filter, band);
    };

    const SweepResult result = sweep(dataset, ops, opts.mode, opts.seed, evaluator, opts.jobs);
    write_sweep_csvs(opts.out, result, opts.mode);
}

void run_run(const RunOptions& opts) {
    RunConfig cfg = run_config_from_json(load_json_file(opts.config));
    if (opts.seed) cfg.pipeline.master_seed = *opts.seed;

    const fs::path out = cfg.output_dir;
    fs::create_directories(out);
    const fs::path augmented_dir = out / "augmented";
    const fs::path preprocessed_dir = out / "preprocessed";

    if (cfg.augment_stage == AugmentStage::Raw) {
        const auto names = list_sample_dirs(cfg.input_dir);
        fs::create_directories(augmented_dir);
        parallel_for(names.size(), opts.jobs, [&](std::size_t i) {
            Sample sample = read_sample(cfg.input_dir / names[i]);
            Sample augmented = apply_pipeline(sample, cfg.pipeline, i);
            augmented.id += "-aug";
            write_sample(augmented, augmented_dir / augmented.id);
        });
        preprocess_dir(augmented_dir, preprocessed_dir, cfg.preprocess, opts.jobs);
    } else {
        require_diff_compatible(cfg.pipeline.ops);
        PipelineSpec diff_spec = cfg.pipeline;
        diff_spec.ops = with_diff_fill(std::move(diff_spec.ops));

        const auto names = list_sample_dirs(cfg.input_dir);
        fs::create_directories(preprocessed_dir);
        parallel_for(names.size(), opts.jobs, [&](std::size_t i) {
            Sample sample = read_sample(cfg.input_dir / names[i]);
            // Crop/resize, then difference frames rescaled into [0, 1] so
            // the pipeline's domain checks hold; augment, then decode and
            // chunk for the estimation stage.
            if (cfg.preprocess.crop < sample.clip.height || cfg.preprocess.crop < sample.clip.width)
                sample.clip = center_crop(sample.clip, cfg.preprocess.crop);
            sample.clip = resize_bilinear(sample.clip, cfg.preprocess.resize);
            sample = to_diff_domain(sample, cfg.preprocess.diff_mode);
            Sample augmented = apply_pipeline(sample, diff_spec, i);
            augmented.clip = rescale_clip(augmented.clip, 2.0, -1.0);
            augmented.id += "-aug";
            for (const Sample& piece : chunk(augmented, cfg.preprocess.chunk_len))
                write_sample(piece, preprocessed_dir / piece.id);
        });
    }

    HrOptions hr;
    hr.in = preprocessed_dir;
    hr.chunk_len = cfg.preprocess.chunk_len;
    hr.low_hz = cfg.filter.low_hz;
    hr.high_hz = cfg.filter.high_hz;
    hr.zero_phase = cfg.filter.zero_phase;
    hr.jobs = opts.jobs;

    hr.out = out / "pred.csv";
    hr.source = HrSource::Video;
    run_hr(hr);
    hr.out = out / "ref.csv";
    hr.source = HrSource::Trace;
    run_hr(hr);

    run_eval({out / "pred.csv", out / "ref.csv", out / "metrics.json", std::nullopt});
}

}  // namespace pulseaug::cmd
