#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsim {

// Malformed input file. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A size guard was violated (brute-force enumeration too large).
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Iterative routine failed to converge within its cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gsim
