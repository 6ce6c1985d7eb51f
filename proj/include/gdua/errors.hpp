#pragma once

#include <stdexcept>
#include <string>

namespace gdua {

// Error kinds mirror the failure modes of the library surface.  The CLI
// maps them onto exit codes: undecided -> 3, syntax/config -> 2, every
// mathematical precondition failure -> 1.
enum class Errc {
    division_by_zero,
    incompatible_field,
    zero_input,
    root_of_unity_input,
    zero_polynomial,
    not_noetherian,
    not_conformal,
    undecided,
    constraint_violated,
    wrong_invariant_shape,
    presentation_mismatch,
    not_normal,
    beta_zero,
    both_roots_of_unity,
    syntax_error,
    config_error,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

    Errc kind() const { return kind_; }

    const char* kind_name() const {
        switch (kind_) {
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::incompatible_field: return "IncompatibleField";
        case Errc::zero_input: return "ZeroInput";
        case Errc::root_of_unity_input: return "RootOfUnityInput";
        case Errc::zero_polynomial: return "ZeroPolynomial";
        case Errc::not_noetherian: return "NotNoetherian";
        case Errc::not_conformal: return "NotConformal";
        case Errc::undecided: return "Undecided";
        case Errc::constraint_violated: return "ConstraintViolated";
        case Errc::wrong_invariant_shape: return "WrongInvariantShape";
        case Errc::presentation_mismatch: return "PresentationMismatch";
        case Errc::not_normal: return "NotNormal";
        case Errc::beta_zero: return "BetaZero";
        case Errc::both_roots_of_unity: return "BothRootsOfUnity";
        case Errc::syntax_error: return "SyntaxError";
        case Errc::config_error: return "ConfigError";
        case Errc::internal: return "Internal";
        }
        return "Unknown";
    }

private:
    Errc kind_;
};

} // namespace gdua
