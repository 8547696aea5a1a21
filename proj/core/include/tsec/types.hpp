#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace tsec {

// Points and directions live in R^3. Planar bodies use the xy-plane and keep
// the third coordinate at zero.
using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Base class for every error raised by the library. `code()` is a short
/// stable identifier such as "empty-section" or "ball-contains-O".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Malformed arguments: non-unit directions, bad parameters, bad specs.
class InputError : public Error {
public:
    using Error::Error;
};

/// A geometric construction that cannot be carried out for the given data.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// A precondition (O-symmetry, B inside K, O outside B, strictness)
/// does not hold for the configuration. A kind of input error.
class HypothesisError : public InputError {
public:
    using InputError::InputError;
};

}  // namespace tsec
