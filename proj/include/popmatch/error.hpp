#pragma once

#include <stdexcept>
#include <string>

namespace popmatch {

// Base class for all errors raised by this library. The CLI maps any
// Error to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed instance or matching file. `line` is 1-based, 0 if unknown.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// An operation was called outside its contract (dependent U, wrong parity,
// even n in odd-exact mode, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// An exhaustive enumeration was requested beyond its configured size guard.
class BoundError : public Error {
public:
    explicit BoundError(const std::string& what) : Error(what) {}
};

}  // namespace popmatch
