#pragma once

#include <stdexcept>
#include <string>

namespace ccr {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OddDimension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateForm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EquivalentClasses : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ModeRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct MaxRetriesExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace ccr
