// Acceptance suite: end-to-end checks of the full engine, one PASS/FAIL
// line per criterion. Exits nonzero if any criterion fails.
//
// Criterion 8 invokes the command-line binary; its path is taken from
// the PULSEAUG_CLI environment variable (set by ctest) with a fallback
// to ./pulseaug next to this executable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pulseaug/analysis.hpp"
#include "pulseaug/commands.hpp"
#include "pulseaug/parallel.hpp"
#include "pulseaug/pipeline.hpp"
#include "pulseaug/rng.hpp"
#include "pulseaug/sample_io.hpp"
#include "pulseaug/signal_ops.hpp"
#include "pulseaug/synth.hpp"
#include "pulseaug/video_ops.hpp"

using namespace pulseaug;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw Failure(message);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// ---------------------------------------------------------------- helpers

VideoClip random_clip(int t, int h, int w, int c, std::uint64_t seed) {
    VideoClip clip = VideoClip::make(t, h, w, c, 30.0);
    SeededRng rng(seed, "acceptance-clip", 0, 0);
    for (float& v : clip.data) v = static_cast<float>(rng.uniform());
    return clip;
}

SignalTrace sinusoid(double freq_hz, double fps, int length) {
    SignalTrace trace;
    trace.fps = fps;
    trace.values.resize(length);
    for (int t = 0; t < length; ++t)
        trace.values[t] = std::sin(2.0 * kPi * freq_hz * t / fps);
    return trace;
}

fs::path cli_path;

fs::path make_temp_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() /
                         ("pulseaug-acceptance-" + std::to_string(::getpid()) + "-" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int run_cli(const std::string& args) {
    const std::string cmd = cli_path.string() + " " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
}

std::vector<char> file_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Byte-compares two directory trees.
void require_trees_identical(const fs::path& a, const fs::path& b) {
    std::vector<fs::path> rel_a, rel_b;
    for (const auto& e : fs::recursive_directory_iterator(a))
        if (e.is_regular_file()) rel_a.push_back(fs::relative(e.path(), a));
    for (const auto& e : fs::recursive_directory_iterator(b))
        if (e.is_regular_file()) rel_b.push_back(fs::relative(e.path(), b));
    std::sort(rel_a.begin(), rel_a.end());
    std::sort(rel_b.begin(), rel_b.end());
    require(rel_a == rel_b, "trees hold different file sets (" + std::to_string(rel_a.size()) +
                                " vs " + std::to_string(rel_b.size()) + " files)");
    for (const auto& rel : rel_a)
        require(file_bytes(a / rel) == file_bytes(b / rel),
                "file differs between runs: " + rel.string());
}

// ------------------------------------------------------------ criterion 1

void criterion_table1() {
    SeededRng rng(2024, "criterion1", 0, 0);
    const int w = 72, h = 72;
    const double cx = (w - 1) / 2.0, cy = (h - 1) / 2.0;

    for (int trial = 0; trial < 20; ++trial) {
        const double x = rng.uniform(-10.0, 82.0);
        const double y = rng.uniform(-10.0, 82.0);
        const double theta = rng.uniform(-kPi, kPi);
        const double m = rng.uniform(-12.0, 12.0);
        const double shear = rng.uniform(-0.5, 0.5);
        double ox, oy;

        // rotation: (x cos - y sin, x sin + y cos) in center-relative coords
        GeometricParams rot;
        rot.theta = theta;
        geometric_forward_map(GeoKind::Rotate, rot, w, h, x, y, ox, oy);
        const double rx = (x - cx) * std::cos(theta) - (y - cy) * std::sin(theta) + cx;
        const double ry = (x - cx) * std::sin(theta) + (y - cy) * std::cos(theta) + cy;
        require(std::abs(ox - rx) < 1e-9 && std::abs(oy - ry) < 1e-9, "rotation map mismatch");

        // translate: (x + m, y) and (x, y + m)
        GeometricParams tr;
        tr.translate_px = m;
        tr.axis = Axis::X;
        geometric_forward_map(GeoKind::Translate, tr, w, h, x, y, ox, oy);
        require(std::abs(ox - (x + m)) < 1e-9 && std::abs(oy - y) < 1e-9,
                "translate X map mismatch");
        tr.axis = Axis::Y;
        geometric_forward_map(GeoKind::Translate, tr, w, h, x, y, ox, oy);
        require(std::abs(ox - x) < 1e-9 && std::abs(oy - (y + m)) < 1e-9,
                "translate Y map mismatch");

        // shear: (x + m y, y) and (x, m x + y)
        GeometricParams sh;
        sh.shear = shear;
        sh.axis = Axis::X;
        geometric_forward_map(GeoKind::Shear, sh, w, h, x, y, ox, oy);
        require(std::abs(ox - (x + shear * y)) < 1e-9 && std::abs(oy - y) < 1e-9,
                "shear X map mismatch");
        sh.axis = Axis::Y;
        geometric_forward_map(GeoKind::Shear, sh, w, h, x, y, ox, oy);
        require(std::abs(ox - x) < 1e-9 && std::abs(oy - (shear * x + y)) < 1e-9,
                "shear Y map mismatch");

        // flip: (a - x, y) with a = W - 1
        GeometricParams fl;
        geometric_forward_map(GeoKind::Flip, fl, w, h, x, y, ox, oy);
        require(std::abs(ox - (w - 1 - x)) < 1e-9 && std::abs(oy - y) < 1e-9,
                "flip map mismatch");
    }

    // Identity parameters resample to bit-identical frames.
    const VideoClip clip = random_clip(3, 48, 48, 3, 77);
    GeometricParams ident;
    for (GeoKind kind : {GeoKind::Rotate, GeoKind::Translate, GeoKind::Shear}) {
        const VideoClip out = warp_affine(clip, ident, kind);
        require(out.data == clip.data, "identity parameters must not alter any pixel");
    }
    const VideoClip flipped_twice =
        warp_affine(warp_affine(clip, ident, GeoKind::Flip), ident, GeoKind::Flip);
    require(flipped_twice.data == clip.data, "double flip must restore the clip");
}

// ------------------------------------------------------------ criterion 2

void criterion_noise_statistics() {
    const double sigma_s_sq = 0.0004, sigma_c_sq = 0.0004;
    std::vector<double> levels, variances;
    for (int i = 1; i <= 9; ++i) levels.push_back(0.1 * i);

    SeededRng rng(2024, "criterion2", 0, 0);
    for (std::size_t li = 0; li < levels.size(); ++li) {
        const VideoClip frame =
            VideoClip::make(1, 1000, 1000, 1, 30.0, static_cast<float>(levels[li]));
        SeededRng level_rng = rng.child(li);
        const VideoClip noisy =
            detail::camera_noise_unclamped(frame, sigma_s_sq, sigma_c_sq, level_rng);
        double sum = 0.0, sq = 0.0;
        for (float v : noisy.data) {
            const double d = static_cast<double>(v) - levels[li];
            sum += d;
            sq += d * d;
        }
        const double n = static_cast<double>(noisy.data.size());
        const double mean = sum / n;
        variances.push_back(sq / n - mean * mean);
    }

    // Least-squares line through (level, variance).
    const double n = static_cast<double>(levels.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        sx += levels[i];
        sy += variances[i];
        sxx += levels[i] * levels[i];
        sxy += levels[i] * variances[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;

    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const double fit = slope * levels[i] + intercept;
        ss_res += (variances[i] - fit) * (variances[i] - fit);
        ss_tot += (variances[i] - sy / n) * (variances[i] - sy / n);
    }
    const double r_sq = 1.0 - ss_res / ss_tot;

    require(r_sq > 0.99, "variance-vs-level fit R^2 = " + fmt(r_sq) + " (need > 0.99)");
    require(std::abs(slope - sigma_s_sq) < 0.05 * sigma_s_sq,
            "fitted slope " + fmt(slope) + " deviates from sigma_s^2 = " + fmt(sigma_s_sq));
    require(std::abs(intercept - sigma_c_sq) < 0.05 * sigma_c_sq,
            "fitted intercept " + fmt(intercept) + " deviates from sigma_c^2 = " +
                fmt(sigma_c_sq));

    // Waveform noise: variance 0.5 within 4% over 1e5 samples.
    SignalTrace zeros;
    zeros.fps = 30.0;
    zeros.values.assign(100'000, 0.0);
    SeededRng srng(2024, "criterion2-signal", 0, 0);
    const SignalTrace noisy = add_gaussian_noise(zeros, 0.5, srng);
    double sum = 0, sq = 0;
    for (double v : noisy.values) {
        sum += v;
        sq += v * v;
    }
    const double count = static_cast<double>(noisy.size());
    const double mean = sum / count;
    const double var = sq / count - mean * mean;
    require(std::abs(var - 0.5) < 0.02,
            "waveform noise variance " + fmt(var) + " outside 0.5 +/- 4%");
}

// ------------------------------------------------------------ criterion 3

void criterion_filter() {
    const FilterConfig cfg;
    auto amplitude_after_filter = [&](double f_hz) {
        const SignalTrace out = butterworth_bandpass(sinusoid(f_hz, 30.0, 900), cfg);
        double peak = 0.0;
        for (std::size_t i = 300; i < 600; ++i) peak = std::max(peak, std::abs(out.values[i]));
        return peak;
    };

    const double pass = amplitude_after_filter(1.5);
    require(std::abs(pass - 1.0) <= 0.05,
            "1.5 Hz passband amplitude " + fmt(pass) + " outside 1.0 +/- 0.05");

    const double low_stop = amplitude_after_filter(0.2);
    require(low_stop < 0.1, "0.2 Hz residual " + fmt(low_stop) + " not below 0.1");

    const double high_stop = amplitude_after_filter(5.0);
    require(high_stop < 0.1, "5 Hz residual " + fmt(high_stop) + " not below 0.1");
}

// ------------------------------------------------------------ criterion 4

void criterion_exact_hr() {
    for (double bpm : {60.0, 90.0, 120.0}) {
        SynthConfig cfg;
        cfg.hr_bpm = bpm;  // 60 s at 30 fps, 72 px
        SeededRng rng(2024, "criterion4", static_cast<std::uint64_t>(bpm), 0);
        const Sample sample = generate_sample(cfg, rng, "hr" + std::to_string(int(bpm)));
        const SignalTrace filtered =
            butterworth_bandpass(oracle_extract(sample), FilterConfig{});
        const double recovered = estimate_hr_fft(filtered).bpm;
        require(recovered == bpm, "expected exactly " + fmt(bpm) + " bpm, recovered " +
                                      fmt(recovered));
    }
}

// ------------------------------------------------------------ criterion 5

void criterion_pipeline_robust_hr() {
    SynthConfig cfg;
    cfg.hr_bpm = 90.0;
    SeededRng gen_rng(2024, "criterion5", 0, 0);
    const Sample clean = generate_sample(cfg, gen_rng, "robust");

    std::vector<std::string> problems(10);
    parallel_for(10, 4, [&](std::size_t seed) {
        PipelineSpec spec = proposed_pipeline_spec(1000 + seed);
        for (auto& op : spec.ops) op.prob = 1.0;
        const Sample augmented = apply_pipeline(clean, spec, 0);

        const double video_bpm =
            estimate_hr_fft(butterworth_bandpass(oracle_extract(augmented), FilterConfig{}))
                .bpm;
        const double trace_bpm =
            estimate_hr_fft(butterworth_bandpass(augmented.trace, FilterConfig{})).bpm;

        std::string problem;
        if (std::abs(video_bpm - 90.0) > 1.0 + 1e-9)
            problem += "seed " + std::to_string(seed) + ": video HR " + fmt(video_bpm) + "; ";
        if (std::abs(trace_bpm - 90.0) > 1.0 + 1e-9)
            problem += "seed " + std::to_string(seed) + ": trace HR " + fmt(trace_bpm) + "; ";
        problems[seed] = problem;
    });

    std::string all;
    for (const auto& p : problems) all += p;
    require(all.empty(), "recovered HR drifted beyond one bin: " + all);
}

// ------------------------------------------------------------ criterion 6

void criterion_ordering() {
    const VideoClip clip = random_clip(1, 72, 72, 3, 66);

    GeometricParams tx;
    tx.translate_px = 5.0;
    tx.axis = Axis::X;
    GeometricParams ty;
    ty.translate_px = -3.0;
    ty.axis = Axis::Y;
    const VideoClip xy =
        warp_affine(warp_affine(clip, tx, GeoKind::Translate), ty, GeoKind::Translate);
    const VideoClip yx =
        warp_affine(warp_affine(clip, ty, GeoKind::Translate), tx, GeoKind::Translate);
    require(xy.data == yx.data, "translate X and translate Y must commute bit-exactly");

    GeometricParams rot;
    rot.theta = 10.0 * kPi / 180.0;
    GeometricParams tr;
    tr.translate_px = 5.0;
    tr.axis = Axis::X;
    const VideoClip rt =
        warp_affine(warp_affine(clip, tr, GeoKind::Translate), rot, GeoKind::Rotate);
    const VideoClip tr_rt =
        warp_affine(warp_affine(clip, rot, GeoKind::Rotate), tr, GeoKind::Translate);

    const int margin = 10;
    int interior = 0, differing = 0;
    for (int y = margin; y < 72 - margin; ++y)
        for (int x = margin; x < 72 - margin; ++x) {
            ++interior;
            for (int c = 0; c < 3; ++c)
                if (std::abs(rt.at(0, y, x, c) - tr_rt.at(0, y, x, c)) > 1.0f / 255.0f) {
                    ++differing;
                    break;
                }
        }
    require(differing * 100 > interior,
            "rotate/translate order changed only " + std::to_string(differing) + " of " +
                std::to_string(interior) + " interior pixels");
}

// ------------------------------------------------------------ criterion 7

void criterion_metrics() {
    struct Case {
        std::vector<double> pred, ref;
        double mae, rmse;
        bool mape_defined = true;
        double mape = 0.0;
        bool pearson_defined = true;
        double pearson = 0.0;
    };
    const std::vector<Case> cases = {
        {{70, 80, 90}, {70, 80, 90}, 0.0, 0.0, true, 0.0, true, 1.0},
        {{72, 75, 80},
         {70, 80, 80},
         7.0 / 3.0,
         std::sqrt(29.0 / 3.0),
         true,
         100.0 * (2.0 / 70.0 + 5.0 / 80.0) / 3.0,
         true,
         11.0 / 14.0},
        {{130, 125, 110, 80}, {70, 75, 90, 120}, 42.5, 45.0, true, 3275.0 / 63.0, true, -1.0},
        {{71, 72}, {80, 80}, 8.5, std::sqrt((81.0 + 64.0) / 2.0), true, 10.625, false, 0.0},
        {{1, 2}, {0, 4}, 1.5, std::sqrt(2.5), false, 0.0, true, 1.0},
    };

    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& c = cases[i];
        const MetricsReport rep = compute_metrics(c.pred, c.ref);
        const std::string tag = "fixed vector " + std::to_string(i) + ": ";
        require(std::abs(rep.mae - c.mae) < 1e-9, tag + "MAE " + fmt(rep.mae));
        require(std::abs(rep.rmse - c.rmse) < 1e-9, tag + "RMSE " + fmt(rep.rmse));
        require(rep.mape.has_value() == c.mape_defined, tag + "MAPE definedness");
        if (c.mape_defined)
            require(std::abs(*rep.mape - c.mape) < 1e-9, tag + "MAPE " + fmt(*rep.mape));
        require(rep.pearson.has_value() == c.pearson_defined, tag + "Pearson definedness");
        if (c.pearson_defined)
            require(std::abs(*rep.pearson - c.pearson) < 1e-9,
                    tag + "Pearson " + fmt(*rep.pearson));
    }

    SeededRng rng(2024, "criterion7", 0, 0);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng.uniform_index(20);
        std::vector<double> pred(n), ref(n);
        for (std::size_t i = 0; i < n; ++i) {
            pred[i] = rng.uniform(40.0, 160.0);
            ref[i] = rng.uniform(40.0, 160.0);
        }
        const MetricsReport rep = compute_metrics(pred, ref);
        require(rep.mae <= rep.rmse + 1e-12, "MAE exceeded RMSE on random input");
    }
}

// ------------------------------------------------------------ criterion 8

void criterion_cli_determinism() {
    require(fs::exists(cli_path), "CLI binary not found at " + cli_path.string() +
                                      " (set PULSEAUG_CLI)");
    const fs::path root = make_temp_dir("determinism");

    const fs::path synth_cfg = root / "synth.json";
    std::ofstream(synth_cfg) << R"({"hr_bpm_range": [60, 120], "fps": 30, "duration_s": 12,
        "size": 48, "pulse_amplitude": 0.02})";
    const fs::path pipeline = root / "pipeline.json";
    std::ofstream(pipeline) << R"({"ops": [
        {"name": "camera_noise", "prob": 0.5}, {"name": "shear_x", "prob": 0.5},
        {"name": "translate_x", "prob": 0.5}, {"name": "rotate", "prob": 0.5},
        {"name": "translate_y", "prob": 0.5}, {"name": "shear_y", "prob": 0.5},
        {"name": "gaussian_noise", "prob": 0.5}, {"name": "baseline_wander", "prob": 0.5}]})";

    auto run_chain = [&](const fs::path& dir, int jobs) {
        const std::string j = " --jobs " + std::to_string(jobs);
        require(run_cli("synth --config " + synth_cfg.string() + " --out " +
                        (dir / "data").string() + " --count 4 --seed 99" + j) == 0,
                "synth failed");
        require(run_cli("augment --pipeline " + pipeline.string() + " --in " +
                        (dir / "data").string() + " --out " + (dir / "aug").string() +
                        " --seed 7" + j) == 0,
                "augment failed");
        require(run_cli("hr --in " + (dir / "aug").string() + " --out " +
                        (dir / "pred.csv").string() + j) == 0,
                "hr (video) failed");
        require(run_cli("hr --in " + (dir / "aug").string() + " --source trace --out " +
                        (dir / "ref.csv").string() + j) == 0,
                "hr (trace) failed");
        require(run_cli("eval --pred " + (dir / "pred.csv").string() + " --ref " +
                        (dir / "ref.csv").string() + " --out " +
                        (dir / "metrics.json").string()) == 0,
                "eval failed");
    };

    const fs::path serial = root / "serial";
    const fs::path threaded = root / "threaded";
    fs::create_directories(serial);
    fs::create_directories(threaded);
    run_chain(serial, 1);
    run_chain(threaded, 8);
    require_trees_identical(serial, threaded);

    fs::remove_all(root);
}

// ------------------------------------------------------------ criterion 9

void criterion_sweep() {
    const fs::path root = make_temp_dir("sweep");
    const fs::path data = root / "data";

    // 20 short synthetic samples across the heart-rate band.
    std::vector<Sample> dataset;
    for (int i = 0; i < 20; ++i) {
        SynthConfig cfg;
        cfg.hr_bpm = 62.0 + 4.0 * i;
        cfg.size = 36;
        cfg.duration_s = 12.0;
        SeededRng rng(2024, "criterion9", static_cast<std::uint64_t>(i), 0);
        char id[16];
        std::snprintf(id, sizeof(id), "s%02d", i);
        dataset.push_back(generate_sample(cfg, rng, id));
        write_sample(dataset.back(), data / id);
    }

    const std::vector<OpSpec> ops = {{"camera_noise", nlohmann::json::object(), 0.5},
                                     {"shear_x", nlohmann::json::object(), 0.5},
                                     {"gaussian_noise", nlohmann::json::object(), 0.5},
                                     {"baseline_wander", nlohmann::json::object(), 0.5}};
    const FilterConfig filter;
    const HrBand band;
    const auto evaluator = [&](const std::vector<Sample>& augmented) {
        return cmd::oracle_dataset_mae(augmented, 180, filter, band);
    };

    const SweepResult single = sweep(dataset, ops, SweepMode::Single, 5, evaluator, 4);
    const SweepResult pairwise = sweep(dataset, ops, SweepMode::Pairwise, 5, evaluator, 4);
    require(pairwise.pairwise.size() == 4, "pairwise matrix must be 4x4");
    for (std::size_t i = 0; i < 4; ++i) {
        require(pairwise.pairwise[i].size() == 4, "pairwise matrix must be 4x4");
        require(std::abs(pairwise.pairwise[i][i] - single.single[i]) < 1e-9,
                "diagonal cell " + std::to_string(i) + " = " + fmt(pairwise.pairwise[i][i]) +
                    " but single-mode value = " + fmt(single.single[i]));
    }

    // The emitted CSV: 4x4 body plus header row and column.
    const fs::path ops_json = root / "ops.json";
    std::ofstream(ops_json) << R"({"ops": [
        {"name": "camera_noise"}, {"name": "shear_x"},
        {"name": "gaussian_noise"}, {"name": "baseline_wander"}]})";
    cmd::SweepOptions sweep_opts;
    sweep_opts.ops = ops_json;
    sweep_opts.dataset = data;
    sweep_opts.out = root / "matrix.csv";
    sweep_opts.mode = SweepMode::Pairwise;
    sweep_opts.seed = 5;
    sweep_opts.jobs = 4;
    cmd::run_sweep(sweep_opts);

    std::ifstream csv(root / "matrix.csv");
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(csv, line)) {
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        rows.push_back(fields);
    }
    require(rows.size() == 5, "pivot CSV must have header plus 4 rows");
    for (const auto& row : rows) require(row.size() == 5, "pivot CSV rows must have 5 fields");
    require(rows[0][1] == "camera_noise" && rows[1][0] == "camera_noise",
            "pivot CSV must carry operator names on both axes");

    // Long-form CSV diagonal agrees with the in-process single-mode values.
    std::ifstream longcsv(root / "matrix.long.csv");
    std::map<std::pair<std::string, std::string>, double> cells;
    std::getline(longcsv, line);  // header
    while (std::getline(longcsv, line)) {
        std::stringstream ss(line);
        std::string r, c, v;
        std::getline(ss, r, ',');
        std::getline(ss, c, ',');
        std::getline(ss, v, ',');
        cells[{r, c}] = std::stod(v);
    }
    for (std::size_t i = 0; i < 4; ++i) {
        const auto key = std::make_pair(single.op_names[i], single.op_names[i]);
        require(cells.count(key) == 1, "long-form CSV missing diagonal cell");
        require(std::abs(cells[key] - single.single[i]) < 1e-9,
                "long-form diagonal disagrees with single mode");
    }

    fs::remove_all(root);
}

}  // namespace

int main(int, char** argv) {
    if (const char* env = std::getenv("PULSEAUG_CLI")) {
        cli_path = env;
    } else {
        cli_path = fs::path(argv[0]).parent_path().parent_path() / "tools" / "pulseaug";
        if (!fs::exists(cli_path)) cli_path = fs::path(argv[0]).parent_path() / "pulseaug";
    }

    struct Criterion {
        int id;
        const char* name;
        std::function<void()> body;
    };
    const std::vector<Criterion> criteria = {
        {1, "geometric coordinate maps match the transform table", criterion_table1},
        {2, "camera and waveform noise statistics", criterion_noise_statistics},
        {3, "Butterworth bandpass conformance", criterion_filter},
        {4, "exact heart-rate recovery at 60/90/120 bpm", criterion_exact_hr},
        {5, "eight-op pipeline preserves recoverable heart rate", criterion_pipeline_robust_hr},
        {6, "operator ordering semantics", criterion_ordering},
        {7, "metrics against hand-computed oracles", criterion_metrics},
        {8, "CLI chain is byte-deterministic across runs and thread counts",
         criterion_cli_determinism},
        {9, "pairwise sweep matrix with single-mode diagonal", criterion_sweep},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            criterion.body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (error.empty()) {
            std::printf("[PASS] %d. %s (%.2f s)\n", criterion.id, criterion.name, seconds);
        } else {
            std::printf("[FAIL] %d. %s (%.2f s): %s\n", criterion.id, criterion.name, seconds,
                        error.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }

    if (failures == 0)
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    else
        std::printf("%d of %zu acceptance criteria FAILED\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
