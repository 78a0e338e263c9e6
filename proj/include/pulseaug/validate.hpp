#pragma once

#include <string>
#include <vector>

#include "pulseaug/types.hpp"

namespace pulseaug {

/// One violated invariant. `code` is machine-readable and stable;
/// `message` is for humans.
struct Violation {
    std::string code;
    std::string message;
};

/// Checks every Sample invariant and returns one entry per violation.
/// An empty result means the sample is well-formed. Violations are data,
/// not failures: this never throws.
std::vector<Violation> validate_sample(const Sample& sample);

/// True iff validate_sample(sample) is empty.
bool sample_valid(const Sample& sample);

}  // namespace pulseaug
