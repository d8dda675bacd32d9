#pragma once

#include <stdexcept>
#include <string>

namespace fascomp {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Dimension mismatch or malformed matrix argument.
struct ShapeError : Error {
    explicit ShapeError(const std::string& what) : Error(what) {}
};

// Non-finite or otherwise invalid numeric input.
struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

// A matrix equation or inequality has no solution (reports the best residual/margin).
struct InfeasibleError : Error {
    explicit InfeasibleError(const std::string& what, double residual = 0.0)
        : Error(what), residual(residual) {}
    double residual;
};

// Structural or certificate-level synthesis failure (rank defect, LMI stall, ...).
struct SynthesisError : Error {
    explicit SynthesisError(const std::string& what) : Error(what) {}
};

// State or output left the declared operating region (full-actuation lost).
struct RegionError : Error {
    explicit RegionError(const std::string& what) : Error(what) {}
};

// Malformed model/design/manifest file.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace fascomp
