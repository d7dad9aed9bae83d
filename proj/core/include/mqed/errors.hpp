#pragma once

#include <stdexcept>
#include <string>

namespace mqed {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A physical-setup field violates its constraint; message names the field.
struct InvalidSetupError : Error {
    using Error::Error;
};

// Config file problem (missing file, unknown/missing/duplicate key, bad value).
struct ConfigError : Error {
    using Error::Error;
};

// Coherent-state tail mass beyond the cutoff exceeds the bound.
struct CutoffError : Error {
    CutoffError(const std::string& msg, int required)
        : Error(msg), required_n_cut(required) {}
    int required_n_cut;
};

// Delta == 0, where the branch expansion is singular.
struct SingularDetuningError : Error {
    using Error::Error;
};

// omega_c * Delta <= g^2 on branch 0: N_0 undefined, branch form unstable.
struct InstabilityError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

// Caller passed a value outside an operation's stated domain.
struct InvalidArgumentError : Error {
    using Error::Error;
};

// ODE step-size underflow while meeting the local tolerance.
struct StiffnessError : Error {
    using Error::Error;
};

// Internal numerical guard tripped (hermiticity or unitarity check).
struct NumericalError : Error {
    using Error::Error;
};

}  // namespace mqed
