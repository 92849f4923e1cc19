#pragma once

#include <stdexcept>
#include <string>

namespace exactcolor {

/// Malformed textual input (DIMACS graph or CNF). `line` is 1-based; 0 means
/// the failure is not tied to a single line (e.g. a missing header).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A configured resource cap was hit (brute-force variable cap, solver node
/// budget). The computation is abandoned, never answered wrongly.
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The exact solver exhausted its node budget with the chromatic number still
/// bracketed in [lower, upper].
class UndecidedError : public LimitError {
public:
    UndecidedError(int lower, int upper)
        : LimitError("chromatic number undecided, bracketed in [" +
                     std::to_string(lower) + ", " + std::to_string(upper) + "]"),
          lower_(lower),
          upper_(upper) {}

    int lower() const noexcept { return lower_; }
    int upper() const noexcept { return upper_; }

private:
    int lower_;
    int upper_;
};

} // namespace exactcolor
