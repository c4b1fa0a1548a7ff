#ifndef DUALS_ERRORS_HPP
#define DUALS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace duals {

/// Base of all library errors.  `kind()` is a stable machine-readable tag
/// used by the CLI when emitting diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

/// Bad input or misuse: parse failures, dimension mismatches, invalid
/// options.  The CLI maps these to exit code 1.
class UsageError : public Error {
public:
    UsageError(const std::string& msg, std::string kind = "usage")
        : Error(std::move(kind), msg) {}
};

/// Mathematical failure: rank ambiguity, non-stabilization, rejected
/// points.  The computation is well-posed but could not be brought to a
/// trustworthy answer.  The CLI maps these to exit code 2.
class MathError : public Error {
public:
    MathError(const std::string& msg, std::string kind = "math")
        : Error(std::move(kind), msg) {}
};

class ParseError : public UsageError {
public:
    ParseError(const std::string& msg, int line, int column)
        : UsageError(msg + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")",
                     "parse"),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class RankAmbiguityError : public MathError {
public:
    explicit RankAmbiguityError(const std::string& msg)
        : MathError(msg, "rank-ambiguity") {}
};

class StabilizationError : public MathError {
public:
    explicit StabilizationError(const std::string& msg)
        : MathError(msg, "non-stabilization") {}
};

class PointError : public MathError {
public:
    explicit PointError(const std::string& msg)
        : MathError(msg, "point-rejected") {}
};

} // namespace duals

#endif
