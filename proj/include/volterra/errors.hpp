#pragma once

#include <stdexcept>
#include <string>

namespace volterra {

// Parse failure with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + message),
          line_(line), col_(col), message_(message) {}

    int line() const noexcept { return line_; }
    int col() const noexcept { return col_; }
    const std::string& message() const noexcept { return message_; }

private:
    int line_;
    int col_;
    std::string message_;
};

// Invalid addressing of a rewrite step.
class StepError : public std::invalid_argument {
public:
    enum class Code { bad_path, not_branching, bad_pair };

    StepError(Code code, const std::string& message)
        : std::invalid_argument(message), code_(code) {}

    Code code() const noexcept { return code_; }

private:
    Code code_;
};

// Numeric evaluation failure: unbound names, twist singularities, bad grids.
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A violated engine invariant. Seeing this means a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace volterra
