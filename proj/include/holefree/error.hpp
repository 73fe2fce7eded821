#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace holefree {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph file. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An enumeration outgrew its configured cap. `count()` is how many items were
/// produced before giving up.
class CapacityExceeded : public Error {
public:
    CapacityExceeded(const std::string& what, std::size_t count)
        : Error(what + " (cap exceeded after " + std::to_string(count) + " items)"), count_(count) {}
    std::size_t count() const noexcept { return count_; }

private:
    std::size_t count_;
};

/// A constructive lemma failed to produce its witness. On long-hole-free inputs
/// this means a bug; on other inputs it is expected.
class WitnessNotFound : public Error {
public:
    using Error::Error;
};

class PreconditionViolation : public Error {
public:
    using Error::Error;
};

/// A brute-force oracle was asked to handle more vertices than it allows.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

class WidthTooLarge : public Error {
public:
    using Error::Error;
};

}  // namespace holefree
