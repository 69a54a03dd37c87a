#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace optonet {

// Error taxonomy. The CLI maps these onto exit codes: InputError -> 3,
// ComputeError -> 4, usage problems -> 2. Library code throws, never exits.

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Bad data coming from outside: files, CLI values, malformed corpora.
class InputError : public Error {
public:
    explicit InputError(const std::string& what_arg) : Error(what_arg) {}
};

// A numeric routine could not produce a valid result (non-convergence,
// degenerate configuration discovered mid-computation).
class ComputeError : public Error {
public:
    explicit ComputeError(const std::string& what_arg) : Error(what_arg) {}
};

// InputError specialisation carrying a source row, so parsers can point at
// the offending line of a CSV file.
class ParseError : public InputError {
public:
    ParseError(const std::string& kind, std::size_t row, const std::string& detail)
        : InputError(kind + " at row " + std::to_string(row) + ": " + detail),
          kind_(kind),
          row_(row) {}

    const std::string& kind() const { return kind_; }
    std::size_t row() const { return row_; }

private:
    std::string kind_;
    std::size_t row_;
};

}  // namespace optonet
