#pragma once

#include <stdexcept>
#include <string>

namespace splitcycle {

enum class ErrorKind {
    InvalidInput,
    Parse,
    NotRealizable,
    OracleBound,
    NoCut,
    Cyclic,
    InvariantViolation,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error(ErrorKind::Parse,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

[[noreturn]] inline void fail_input(const std::string& message) {
    throw Error(ErrorKind::InvalidInput, message);
}

} // namespace splitcycle
