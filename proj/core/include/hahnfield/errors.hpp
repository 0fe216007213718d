#ifndef HAHNFIELD_ERRORS_HPP
#define HAHNFIELD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hahnfield {

enum class ErrorCode {
    BoundExceeded,
    NonPositiveCut,
    UnrepresentableCut,
    DivisionByZero,
    ZeroDivisor,
    RootDepthExceeded,
    HorizonExceeded,
    NotSimpleRoot,
    NotPseudoCauchy,
    ParseError,
    IncompatibleContext,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Parse failures carry a position and the token class that was expected.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& expected,
               const std::string& message)
        : Error(ErrorCode::ParseError,
                message + " at " + std::to_string(line) + ":" + std::to_string(column) +
                    " (expected " + expected + ")"),
          line_(line), column_(column), expected_(expected) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string expected_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace hahnfield

#endif
