#pragma once
#include <stdexcept>
#include <string>

namespace spun {

// Base class for all library errors. `user_error` separates bad input
// (CLI exit code 2) from violated mathematical postconditions (exit code 3).
class Error : public std::runtime_error {
public:
    Error(const std::string& what, bool user_error)
        : std::runtime_error(what), user_error_(user_error) {}
    bool user_error() const noexcept { return user_error_; }

private:
    bool user_error_;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what, true), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what, true) {}
};

// A vertex link is not a torus or Klein bottle (Euler characteristic != 0).
class NonCuspedLink : public ValidationError {
public:
    explicit NonCuspedLink(const std::string& what) : ValidationError(what) {}
};

class AlreadyOrientable : public ValidationError {
public:
    explicit AlreadyOrientable(const std::string& what) : ValidationError(what) {}
};

// A vector handed in as a matching-system solution is not one.
class NotASolution : public ValidationError {
public:
    NotASolution(const std::string& what, int equation)
        : ValidationError(what + " (equation " + std::to_string(equation) + ")"),
          equation_(equation) {}
    int equation() const noexcept { return equation_; }

private:
    int equation_;
};

class ScaleLimit : public ValidationError {
public:
    explicit ScaleLimit(const std::string& what) : ValidationError(what) {}
};

class MathError : public Error {
public:
    explicit MathError(const std::string& what) : Error(what, false) {}
};

// Canonical basis size does not match the nullity of the compatibility system.
class BasisDefect : public MathError {
public:
    explicit BasisDefect(const std::string& what) : MathError(what) {}
};

// Solution-space dimension disagrees with the 2k+c count.
class DimensionMismatch : public MathError {
public:
    explicit DimensionMismatch(const std::string& what) : MathError(what) {}
};

// A boundary chain failed to close up.
class NotACycle : public MathError {
public:
    explicit NotACycle(const std::string& what) : MathError(what) {}
};

} // namespace spun
