#include "pulseaug/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pulseaug/parallel.hpp"
#include "pulseaug/signal_ops.hpp"
#include "pulseaug/validate.hpp"
#include "pulseaug/video_ops.hpp"

namespace pulseaug {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr const char* kStageAugment = "augment";
constexpr const char* kStageBatchParams = "batch-params";

using nlohmann::json;

double get_num(const json& params, const char* key, double fallback) {
    if (!params.contains(key)) return fallback;
    if (!params.at(key).is_number())
        throw std::invalid_argument(std::string("parameter '") + key + "' must be a number");
    return params.at(key).get<double>();
}

int get_int(const json& params, const char* key, int fallback) {
    if (!params.contains(key)) return fallback;
    if (!params.at(key).is_number_integer())
        throw std::invalid_argument(std::string("parameter '") + key + "' must be an integer");
    return params.at(key).get<int>();
}

std::pair<double, double> get_range(const json& params, const char* key, double lo, double hi) {
    if (!params.contains(key)) return {lo, hi};
    const json& r = params.at(key);
    if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number())
        throw std::invalid_argument(std::string("parameter '") + key +
                                    "' must be a [low, high] array");
    const double a = r[0].get<double>();
    const double b = r[1].get<double>();
    if (!(a <= b))
        throw std::invalid_argument(std::string("parameter '") + key + "' range is not ordered");
    return {a, b};
}

// ---------------------------------------------------------------------
// Operator registry. `draw` produces the strength values that
// batch-consistent mode shares across samples; `apply` consumes them and
// keeps using the stream for per-frame / per-element randomness.
// ---------------------------------------------------------------------

struct OperatorDef {
    const char* name;
    OpDomain domain;
    std::vector<double> (*draw)(const json& params, SeededRng& rng);
    void (*apply)(Sample& sample, const std::vector<double>& strengths, const json& params,
                  SeededRng& rng);
};

std::vector<double> draw_none(const json&, SeededRng&) { return {}; }

GeometricParams geo_params(const json& params) {
    GeometricParams g;
    g.fill = get_num(params, "fill", 0.0);
    return g;
}

const OperatorDef kOperators[] = {
    // -- video, geometric --
    {"rotate", OpDomain::Video,
     [](const json& params, SeededRng& rng) {
         auto [lo, hi] = get_range(params, "theta_deg_range", -15.0, 15.0);
         return std::vector<double>{rng.uniform(lo, hi) * kPi / 180.0};
     },
     [](Sample& s, const std::vector<double>& m, const json& params, SeededRng&) {
         GeometricParams g = geo_params(params);
         g.theta = m.at(0);
         s.clip = warp_affine(s.clip, g, GeoKind::Rotate);
     }},
    {"translate_x", OpDomain::Video,
     [](const json& params, SeededRng& rng) {
         auto [lo, hi] = get_range(params, "fraction_range", -0.1, 0.1);
         return std::vector<double>{rng.uniform(lo, hi)};
     },
     [](Sample& s, const std::vector<double>& m, const json& params, SeededRng&) {
         GeometricParams g = geo_params(params);
         g.axis = Axis::X;
         // Drawn strength is a fraction of the frame side, snapped to whole
         // pixels so translate X / translate Y compose bit-exactly.
         g.translate_px = static_cast<double>(std::llround(m.at(0) * s.clip.width));
         s.clip = warp_affine(s.clip, g, GeoKind::Translate);
     }},
    {"translate_y", OpDomain::Video,
     [](const json& params, SeededRng& rng) {
         auto [lo, hi] = get_range(params, "fraction_range", -0.1, 0.1);
         return std::vector<double>{rng.uniform(lo, hi)};
     },
     [](Sample& s, const std::vector<double>& m, const json& params, SeededRng&) {
         GeometricParams g = geo_params(params);
         g.axis = Axis::Y;
         g.translate_px = static_cast<double>(std::llround(m.at(0) * s.clip.height));
         s.clip = warp_affine(s.clip, g, GeoKind::Translate);
     }},
    {"shear_x", OpDomain::Video,
     [](const json& params, SeededRng& rng) {
         auto [lo, hi] = get_range(params, "m_range", -0.2, 0.2);
         return std::vector<double>{rng.uniform(lo, hi)};
     },
     [](Sample& s, const std::vector<double>& m, const json& params, SeededRng&) {
         GeometricParams g = geo_params(params);
         g.axis = Axis::X;
         g.shear = m.at(0);
         s.clip = warp_affine(s.clip, g, GeoKind::Shear);
     }},
    {"shear_y", OpDomain::Video,
     [](const json& params, SeededRng& rng) {
         auto [lo, hi] = get_range(params, "m_range", -0.2, 0.2);
         return std::vector<double>{rng.uniform(lo, hi)};
     },
     [](Sample& s, const std::vector<double>& m, const json& params, SeededRng&) {
         GeometricParams g = geo_params(params);
         g.axis = Axis::Y;
         g.shear = m.at(0);
         s.clip = warp_affine(s.clip, g, GeoKind::Shear);
     }},
    {"flip", OpDomain::Video, draw_none,
     [](Sample& s, const std::vector<double>&, const json& params, SeededRng&) {
         s.clip = warp_affine(s.clip, geo_params(params), GeoKind::Flip);
     }},
    // -- video, appearance --
    {"random_erase", OpDomain::Video, draw_none,
     [](Sample& s, const std::vector<double>&, const json& params, SeededRng& rng) {
         s.clip = random_erase(s.clip, rng, get_int(params, "size", 7));
     }},
    {"brightness", OpDomain::Video,
     [](const json& params, SeededRng& rng) {
         auto [lo, hi] = get_range(params, "factor_range", 0.75, 1.25);
         return std::vector<double>{rng.uniform(lo, hi)};
     },
     [](Sample& s, const std::vector<double>& m, const json&, SeededRng&) {
         s.clip = adjust_brightness(s.clip, m.at(0));
     }},
    {"saturation", OpDomain::Video,
     [](const json& params, SeededRng& rng) {
         auto [lo, hi] = get_range(params, "factor_range", 0.75, 1.25);
         return std::vector<double>{rng.uniform(lo, hi)};
     },
     [](Sample& s, const std::vector<double>& m, const json&, SeededRng&) {
         s.clip = adjust_saturation(s.clip, m.at(0));
     }},
    {"camera_noise", OpDomain::Video, draw_none,
     [](Sample& s, const std::vector<double>&, const json& params, SeededRng& rng) {
         s.clip = camera_noise(s.clip, get_num(params, "sigma_s_sq", 0.0004),
                               get_num(params, "sigma_c_sq", 0.0004), rng);
     }},
    // -- signal --
    {"gaussian_noise", OpDomain::Signal, draw_none,
     [](Sample& s, const std::vector<double>&, const json& params, SeededRng& rng) {
         s.trace = add_gaussian_noise(s.trace, get_num(params, "variance", 0.5), rng);
     }},
    {"baseline_wander", OpDomain::Signal,
     [](const json& params, SeededRng& rng) {
         auto [alo, ahi] = get_range(params, "amplitude_range", 0.0, 0.2);
         auto [flo, fhi] = get_range(params, "freq_range_hz", 0.0, 0.5);
         const double amplitude = rng.uniform(alo, ahi);
         const double freq = rng.uniform(flo, fhi);
         const double phase = rng.uniform(0.0, 2.0 * kPi);
         return std::vector<double>{amplitude, freq, phase};
     },
     [](Sample& s, const std::vector<double>& m, const json&, SeededRng&) {
         s.trace = add_baseline_wander(s.trace, m.at(0), m.at(1), m.at(2));
     }},
    {"scaling", OpDomain::Signal,
     [](const json& params, SeededRng& rng) {
         auto [lo, hi] = get_range(params, "factor_range", 0.75, 1.25);
         return std::vector<double>{rng.uniform(lo, hi)};
     },
     [](Sample& s, const std::vector<double>& m, const json&, SeededRng&) {
         s.trace = scale_signal(s.trace, m.at(0));
     }},
    {"magnitude_warp", OpDomain::Signal,
     [](const json& params, SeededRng& rng) {
         auto [lo, hi] = get_range(params, "sigma_range", 0.0, 0.25);
         // Half-open draw from (lo, hi]: sigma must stay strictly positive.
         return std::vector<double>{hi - (hi - lo) * rng.uniform()};
     },
     [](Sample& s, const std::vector<double>& m, const json& params, SeededRng& rng) {
         s.trace = magnitude_warp(s.trace, m.at(0), get_int(params, "knots", 4), rng);
     }},
};

const OperatorDef* find_operator(const std::string& name) {
    for (const auto& def : kOperators)
        if (name == def.name) return &def;
    return nullptr;
}

void validate_op_spec(const OpSpec& op) {
    const OperatorDef* def = find_operator(op.name);
    if (!def) throw std::invalid_argument("unknown operator '" + op.name + "'");
    if (!(op.prob >= 0.0 && op.prob <= 1.0))
        throw std::invalid_argument("operator '" + op.name + "' probability outside [0, 1]");
    if (!op.params.is_object())
        throw std::invalid_argument("operator '" + op.name + "' params must be an object");

    // Range sanity for the parameters that carry hard domain bounds.
    if (op.name == "gaussian_noise" && get_num(op.params, "variance", 0.5) < 0.0)
        throw std::invalid_argument("gaussian_noise variance must be >= 0");
    if (op.name == "baseline_wander") {
        auto [alo, ahi] = get_range(op.params, "amplitude_range", 0.0, 0.2);
        auto [flo, fhi] = get_range(op.params, "freq_range_hz", 0.0, 0.5);
        if (alo < 0.0 || ahi > 0.2)
            throw std::invalid_argument("baseline_wander amplitude range must lie in [0, 0.2]");
        if (flo < 0.0 || fhi > 0.5)
            throw std::invalid_argument("baseline_wander frequency range must lie in [0, 0.5] Hz");
    }
    if (op.name == "magnitude_warp") {
        auto [slo, shi] = get_range(op.params, "sigma_range", 0.0, 0.25);
        if (slo < 0.0 || shi > 0.25 || !(shi > 0.0))
            throw std::invalid_argument("magnitude_warp sigma range must lie in (0, 0.25]");
        if (get_int(op.params, "knots", 4) < 2)
            throw std::invalid_argument("magnitude_warp needs at least 2 knots");
    }
    if (op.name == "random_erase" && get_int(op.params, "size", 7) < 1)
        throw std::invalid_argument("random_erase size must be >= 1");
    if (op.name == "camera_noise" &&
        (get_num(op.params, "sigma_s_sq", 0.0004) < 0.0 ||
         get_num(op.params, "sigma_c_sq", 0.0004) < 0.0))
        throw std::invalid_argument("camera_noise variance coefficients must be >= 0");
    const double fill = get_num(op.params, "fill", 0.0);
    if (fill < 0.0 || fill > 1.0)
        throw std::invalid_argument("fill value must lie in [0, 1]");
}

}  // namespace

const std::vector<std::string>& registered_operators() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& def : kOperators) out.emplace_back(def.name);
        return out;
    }();
    return names;
}

bool operator_registered(const std::string& name) { return find_operator(name) != nullptr; }

OpDomain operator_domain(const std::string& name) {
    const OperatorDef* def = find_operator(name);
    if (!def) throw std::invalid_argument("unknown operator '" + name + "'");
    return def->domain;
}

void validate_pipeline_spec(const PipelineSpec& spec) {
    int flips = 0;
    for (const auto& op : spec.ops) {
        validate_op_spec(op);
        if (op.name == "flip") ++flips;
    }
    if (flips > 1)
        throw std::invalid_argument("pipeline may contain at most one flip operator");
}

Sample apply_pipeline(const Sample& sample, const PipelineSpec& spec,
                      std::uint64_t sample_index) {
    validate_pipeline_spec(spec);
    {
        const auto violations = validate_sample(sample);
        if (!violations.empty())
            throw PipelineError("input sample invalid: " + violations.front().code);
    }

    // Strengths shared across the batch come from a stream that depends
    // only on (seed, operator index), never on the sample.
    std::vector<std::vector<double>> batch_strengths;
    if (spec.batch_consistent) {
        batch_strengths.resize(spec.ops.size());
        for (std::size_t i = 0; i < spec.ops.size(); ++i) {
            SeededRng rng(spec.master_seed, kStageBatchParams, 0, i);
            batch_strengths[i] = find_operator(spec.ops[i].name)->draw(spec.ops[i].params, rng);
        }
    }

    Sample current = sample;
    for (std::size_t i = 0; i < spec.ops.size(); ++i) {
        const OpSpec& op = spec.ops[i];
        const OperatorDef* def = find_operator(op.name);
        SeededRng rng(spec.master_seed, kStageAugment, sample_index, i);

        if (!(rng.uniform() < op.prob)) continue;
        try {
            const std::vector<double> strengths =
                spec.batch_consistent ? batch_strengths[i] : def->draw(op.params, rng);
            def->apply(current, strengths, op.params, rng);
        } catch (const std::invalid_argument& e) {
            throw PipelineError("operator " + std::to_string(i) + " (" + op.name +
                                "): " + e.what());
        }
    }

    {
        const auto violations = validate_sample(current);
        if (!violations.empty())
            throw PipelineError("pipeline produced an invalid sample: " +
                                violations.front().code);
    }
    return current;
}

PipelineSpec proposed_pipeline_spec(std::uint64_t master_seed) {
    PipelineSpec spec;
    spec.master_seed = master_seed;
    for (const char* name : {"camera_noise", "shear_x", "translate_x", "rotate", "translate_y",
                             "shear_y", "gaussian_noise", "baseline_wander"})
        spec.ops.push_back({name, nlohmann::json::object(), 0.5});
    return spec;
}

SweepResult sweep(const std::vector<Sample>& dataset, const std::vector<OpSpec>& ops,
                  SweepMode mode, std::uint64_t master_seed, const DatasetEvaluator& evaluator,
                  int jobs) {
    if (dataset.empty()) throw std::invalid_argument("sweep requires a non-empty dataset");
    if (ops.empty()) throw std::invalid_argument("sweep requires at least one operator");

    const std::size_t k = ops.size();
    SweepResult result;
    for (const auto& op : ops) result.op_names.push_back(op.name);

    auto evaluate_cell = [&](const std::vector<OpSpec>& cell_ops) {
        PipelineSpec spec;
        spec.ops = cell_ops;
        spec.master_seed = master_seed;
        std::vector<Sample> augmented(dataset.size());
        for (std::size_t s = 0; s < dataset.size(); ++s)
            augmented[s] = apply_pipeline(dataset[s], spec, s);
        return evaluator(augmented);
    };

    if (mode == SweepMode::Single) {
        result.single.resize(k);
        parallel_for(k, jobs, [&](std::size_t i) {
            result.single[i] = evaluate_cell({ops[i]});
        });
        return result;
    }

    result.pairwise.assign(k, std::vector<double>(k, 0.0));
    parallel_for(k * k, jobs, [&](std::size_t cell) {
        const std::size_t i = cell / k;
        const std::size_t j = cell % k;
        // The diagonal is the operator alone, mirroring single mode.
        result.pairwise[i][j] =
            i == j ? evaluate_cell({ops[i]}) : evaluate_cell({ops[i], ops[j]});
    });
    return result;
}

}  // namespace pulseaug
