#ifndef GNLINK_ERROR_HPP
#define GNLINK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gnlink {

/// Base class for all gnlink errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad configuration or invalid argument (CLI exit code 2).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Numerical failure during evaluation (CLI exit code 3).
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

/// A validation-suite check failed (CLI exit code 4).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

} // namespace gnlink

#endif
