#pragma once

#include <stdexcept>
#include <string>

namespace kirchhoff {

// Two fields on different grids were combined.
struct DomainMismatchError : std::invalid_argument {
    explicit DomainMismatchError(const std::string& what)
        : std::invalid_argument("domain mismatch: " + what) {}
};

// An iterative solver ran out of iterations before reaching its tolerance.
struct IterationLimitError : std::runtime_error {
    IterationLimitError(const std::string& what, int iterations_, double residual_)
        : std::runtime_error(what), iterations(iterations_), residual(residual_) {}
    int iterations;
    double residual;  // last measured residual or increment
};

// Source term with a negative node.
struct InvalidSourceError : std::invalid_argument {
    explicit InvalidSourceError(const std::string& what) : std::invalid_argument(what) {}
};

// Source term identically zero.
struct DegenerateSourceError : std::invalid_argument {
    explicit DegenerateSourceError(const std::string& what) : std::invalid_argument(what) {}
};

// Reduction with alpha <= 0 (no Poisson mass to scale against).
struct DegenerateReductionError : std::invalid_argument {
    explicit DegenerateReductionError(const std::string& what) : std::invalid_argument(what) {}
};

// An operation that needs a nonzero field received the zero field.
struct ZeroFieldError : std::invalid_argument {
    explicit ZeroFieldError(const std::string& what) : std::invalid_argument(what) {}
};

// A branch with a - b*norm_sq == 0; the reconstruction factor is undefined.
struct DegenerateCoefficientError : std::runtime_error {
    explicit DegenerateCoefficientError(const std::string& what) : std::runtime_error(what) {}
};

// A computed branch failed its weak-residual check.
struct VerificationFailureError : std::runtime_error {
    VerificationFailureError(const std::string& what, double residual_)
        : std::runtime_error(what), residual(residual_) {}
    double residual;
};

// Descent iterate left the trust ball ||u||^2 < 2a/(3b).
struct BallEscapeError : std::runtime_error {
    BallEscapeError(const std::string& what, double norm_sq_)
        : std::runtime_error(what), norm_sq(norm_sq_) {}
    double norm_sq;
};

// Config text could not be parsed.
struct ParseError : std::runtime_error {
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
    int line;
};

// Config parsed but a field violates its constraints.
struct ValidationError : std::runtime_error {
    ValidationError(std::string field_, const std::string& what)
        : std::runtime_error(field_ + ": " + what), field(std::move(field_)) {}
    std::string field;
};

}  // namespace kirchhoff
