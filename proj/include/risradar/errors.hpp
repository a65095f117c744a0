#pragma once

#include <stdexcept>
#include <string>

namespace risradar {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Coincident nodes, zero-length links, or non-orthonormal panel frames.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// Config parse or schema violation; the message names the offending
/// field or the line:column of the parse failure.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Output file could not be written.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace risradar
