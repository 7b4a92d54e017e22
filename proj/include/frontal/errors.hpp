#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frontal {

// Textual input could not be parsed; `position` is a 0-based offset into the
// input (or a line number for line-oriented formats, see the throw site).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class UnknownVariableError : public ParseError {
public:
    UnknownVariableError(const std::string& name, std::size_t position)
        : ParseError("unknown variable '" + name + "'", position), name_(name) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// Two values built over different variable contexts were combined.
class ContextMismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A precondition on mathematical input was violated (wrong corank, constant
// term where none is allowed, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Coefficient matching for the frontal coefficients has no solution at some
// degree: the input is not frontal in the given coordinates.
class InconsistentSystemError : public DomainError {
public:
    explicit InconsistentSystemError(int degree)
        : DomainError("no solution for the frontal coefficients at degree " +
                      std::to_string(degree)),
          degree_(degree) {}

    int degree() const { return degree_; }

private:
    int degree_;
};

} // namespace frontal
