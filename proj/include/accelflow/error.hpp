#pragma once

#include <stdexcept>
#include <string>

namespace accelflow {

enum class ErrorKind {
    Argument,
    Schedule,
    Capability,
    Domain,
    Divergence,
    ConfigParse,
    ConfigSchema,
    FileNotFound,
    Io,
};

/// Base of every exception thrown by the library. The kind maps one-to-one
/// onto the C API status codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& what) : Error(ErrorKind::Argument, what) {}
};

class ScheduleError : public Error {
public:
    explicit ScheduleError(const std::string& what) : Error(ErrorKind::Schedule, what) {}
};

class CapabilityError : public Error {
public:
    explicit CapabilityError(const std::string& what) : Error(ErrorKind::Capability, what) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class DivergenceError : public Error {
public:
    DivergenceError(const std::string& what, double last_valid_time)
        : Error(ErrorKind::Divergence, what), last_valid_time_(last_valid_time) {}

    double last_valid_time() const noexcept { return last_valid_time_; }

private:
    double last_valid_time_;
};

class ConfigParseError : public Error {
public:
    ConfigParseError(const std::string& what, int line)
        : Error(ErrorKind::ConfigParse, what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

class ConfigSchemaError : public Error {
public:
    explicit ConfigSchemaError(const std::string& what) : Error(ErrorKind::ConfigSchema, what) {}
};

class FileNotFoundError : public Error {
public:
    explicit FileNotFoundError(const std::string& what) : Error(ErrorKind::FileNotFound, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

} // namespace accelflow
