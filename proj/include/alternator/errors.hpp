#ifndef ALTERNATOR_ERRORS_HPP
#define ALTERNATOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace alternator {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

class FieldMismatch : public Error {
public:
    explicit FieldMismatch(const std::string& msg = "operands belong to different fields") : Error(msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg = "dimension mismatch") : Error(msg) {}
};

class InvalidField : public Error {
public:
    explicit InvalidField(const std::string& msg) : Error(msg) {}
};

class InvalidForm : public Error {
public:
    explicit InvalidForm(const std::string& msg) : Error(msg) {}
};

class InvalidInvolution : public Error {
public:
    explicit InvalidInvolution(const std::string& msg) : Error(msg) {}
};

class NotOrthogonal : public Error {
public:
    explicit NotOrthogonal(const std::string& msg = "involution is not orthogonal") : Error(msg) {}
};

class NotAUnit : public Error {
public:
    explicit NotAUnit(const std::string& msg = "element is not invertible") : Error(msg) {}
};

class UnsupportedProvenance : public Error {
public:
    explicit UnsupportedProvenance(const std::string& msg) : Error(msg) {}
};

class PhiConstructionFailed : public Error {
public:
    explicit PhiConstructionFailed(const std::string& msg) : Error(msg) {}
};

/// Raised by the text-format parsers; carries a 1-based line/column position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace alternator

#endif
