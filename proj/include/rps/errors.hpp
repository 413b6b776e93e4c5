#pragma once

#include <stdexcept>
#include <string>

namespace rps {

enum class ErrorKind {
    config,
    coefficient,
    structural,
    index,
    degenerate_support,
    solver,
    conditioning,
    measurement,
    fit,
    io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind), message_(what) {}

    ErrorKind kind() const noexcept { return kind_; }
    const char* what() const noexcept override { return message_.c_str(); }
    /// Prefixes the message with "context: ", keeping the dynamic type for rethrow.
    void add_context(const std::string& context) { message_ = context + ": " + message_; }

private:
    ErrorKind kind_;
    std::string message_;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(ErrorKind::config, what) {}
};

class CoefficientError : public Error {
public:
    explicit CoefficientError(const std::string& what) : Error(ErrorKind::coefficient, what) {}
};

class StructuralError : public Error {
public:
    explicit StructuralError(const std::string& what) : Error(ErrorKind::structural, what) {}
};

class IndexError : public Error {
public:
    explicit IndexError(const std::string& what) : Error(ErrorKind::index, what) {}
};

class DegenerateSupportError : public Error {
public:
    explicit DegenerateSupportError(const std::string& what)
        : Error(ErrorKind::degenerate_support, what) {}
};

/// Raised when an iterative or direct solve misses its residual target.
class SolverError : public Error {
public:
    SolverError(const std::string& what, double residual)
        : Error(ErrorKind::solver, what + " (relative residual " + std::to_string(residual) + ")"),
          residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

class ConditioningError : public Error {
public:
    ConditioningError(const std::string& what, double condition_estimate)
        : Error(ErrorKind::conditioning,
                what + " (condition estimate " + std::to_string(condition_estimate) + ")"),
          condition_(condition_estimate) {}

    double condition_estimate() const noexcept { return condition_; }

private:
    double condition_;
};

class MeasurementError : public Error {
public:
    explicit MeasurementError(const std::string& what) : Error(ErrorKind::measurement, what) {}
};

class FitError : public Error {
public:
    explicit FitError(const std::string& what) : Error(ErrorKind::fit, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

}  // namespace rps
