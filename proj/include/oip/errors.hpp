#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oip {

/// Base for every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Carrier-density evaluation produced a negative carrier density beyond round-off.
class NonPhysicalProfile : public Error {
public:
    using Error::Error;
};

class GridMismatch : public Error {
public:
    using Error::Error;
};

class SingularConversion : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

class NonPassiveData : public Error {
public:
    using Error::Error;
};

/// Calibration target unreachable; carries the coupling value that would be required.
class OutOfRange : public Error {
public:
    OutOfRange(const std::string& what, double required)
        : Error(what), required_(required) {}
    double required() const noexcept { return required_; }

private:
    double required_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class NonMonotoneFrequency : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    ConfigError(std::string key_path, const std::string& reason)
        : Error(key_path + ": " + reason), key_path_(std::move(key_path)) {}
    const std::string& key_path() const noexcept { return key_path_; }

private:
    std::string key_path_;
};

} // namespace oip
