#pragma once

#include <stdexcept>
#include <string>

namespace levykit {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite or malformed arguments.
class invalid_input_error : public error {
public:
    using error::error;
};

/// A requested value lies outside the attainable range of a function.
class out_of_range_error : public error {
public:
    using error::error;
};

/// A documented precondition of an operation is violated.
class precondition_error : public error {
public:
    using error::error;
};

/// The operation is not available for this model (e.g. missing exponential moments).
class feature_error : public error {
public:
    using error::error;
};

/// A numerical procedure failed to converge or produced an unusable result.
class numeric_error : public error {
public:
    using error::error;
};

/// A defining integral diverges.
class divergence_error : public error {
public:
    using error::error;
};

/// Arguments are outside the asymptotic regime an estimate is valid in.
class regime_error : public error {
public:
    using error::error;
};

}  // namespace levykit
