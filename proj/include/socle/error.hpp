#pragma once

#include <stdexcept>
#include <string>

namespace socle {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured search or closure ceiling was exceeded before the
/// computation stabilized. Callers map this to its own exit code.
class CeilingError : public Error {
public:
    explicit CeilingError(const std::string& msg) : Error(msg) {}
};

/// Malformed textual input (polynomial grammar or ring-description file).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace socle
