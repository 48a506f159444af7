#ifndef NILCERT_ERRORS_HPP
#define NILCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nilcert {

enum class ErrorKind {
    DivisionByZero,
    DimensionMismatch,
    Singular,
    MultipleRadicals,
    Syntax,
    UnknownName,
    NotInVariety,
    Cycle,
    Io,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Parse failure carrying the 0-based column (and 1-based line when known).
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t column, std::size_t line = 0)
        : Error(ErrorKind::Syntax, what), column_(column), line_(line) {}

    std::size_t column() const noexcept { return column_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t column_;
    std::size_t line_;
};

}  // namespace nilcert

#endif
