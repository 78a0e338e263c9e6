#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pulseaug/rng.hpp"
#include "pulseaug/types.hpp"

namespace pulseaug {

/// One operator entry: registered name, parameter overrides (ranges and
/// fixed settings; defaults apply for missing keys), and the application
/// probability.
struct OpSpec {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    double prob = 0.5;
};

/// Ordered operator list plus the master seed. List order is application
/// order. With batch_consistent, drawn strengths are shared by every
/// sample in the batch while inclusion coins stay per-sample.
struct PipelineSpec {
    std::vector<OpSpec> ops;
    std::uint64_t master_seed = 0;
    bool batch_consistent = false;
};

/// Thrown when an operator fails inside a pipeline; names the operator
/// index and operator.
class PipelineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OpDomain { Video, Signal };

/// All registered operator names, video group first.
const std::vector<std::string>& registered_operators();
bool operator_registered(const std::string& name);
OpDomain operator_domain(const std::string& name);

/// Throws std::invalid_argument when the spec violates its invariants
/// (unknown name, probability outside [0,1], more than one flip,
/// malformed parameter ranges).
void validate_pipeline_spec(const PipelineSpec& spec);

/// Applies the operators strictly in list order. For each operator an
/// independent coin from the (augment, sample_index, operator_index)
/// stream decides inclusion; strengths are drawn from the same stream
/// (or the shared batch stream). Video operators touch only the clip,
/// signal operators only the trace.
Sample apply_pipeline(const Sample& sample, const PipelineSpec& spec,
                      std::uint64_t sample_index);

/// The default eight-operator sequence: camera noise, shear X,
/// translate X, rotate, translate Y, shear Y, then Gaussian noise and
/// baseline wander; every probability 0.5.
PipelineSpec proposed_pipeline_spec(std::uint64_t master_seed);

enum class SweepMode { Single, Pairwise };

/// Maps an augmented dataset to a scalar MAE.
using DatasetEvaluator = std::function<double(const std::vector<Sample>&)>;

struct SweepResult {
    std::vector<std::string> op_names;
    std::vector<double> single;                 // per-op MAE (single mode)
    std::vector<std::vector<double>> pairwise;  // entry (i, j): "op i then op j"
};

/// Runs the evaluator over every augmented variant of the dataset. In
/// pairwise mode the diagonal cell (i, i) applies op i alone, so it
/// reproduces the single-mode value exactly under the same seed.
SweepResult sweep(const std::vector<Sample>& dataset, const std::vector<OpSpec>& ops,
                  SweepMode mode, std::uint64_t master_seed, const DatasetEvaluator& evaluator,
                  int jobs = 1);

}  // namespace pulseaug
