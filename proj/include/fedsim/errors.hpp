#ifndef FEDSIM_ERRORS_HPP
#define FEDSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fedsim {

// Invalid argument values (p outside [0,1], alpha <= 0, ...).
struct ParamError : std::invalid_argument {
    explicit ParamError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed input bytes (IDX magic, truncated payload).
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Inputs that disagree with each other (image/label count mismatch).
struct ConsistencyError : std::runtime_error {
    explicit ConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

// A request that cannot be satisfied by any assignment (N > #examples).
struct InfeasibilityError : std::runtime_error {
    explicit InfeasibilityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure (singular system, non-finite iterate).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Experiment config rejected by schema validation; carries the field path.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fedsim

#endif
