#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netfit {

/// Base for every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed edge-list or CSV input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string& what) : Error(what) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

/// A metric was asked for on a graph outside its domain (e.g. density with n < 2).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid generator or fitting parameters.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A generator could not complete (retry budget exhausted, no switch partner).
class ConstructionError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual)
        : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace netfit
