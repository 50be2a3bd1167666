#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zx {

// Base for all library errors. `kind()` is a stable machine-readable tag used
// by the CLI's one-line error format.
class Error : public std::runtime_error {
public:
    Error(std::string kind, std::string detail)
        : std::runtime_error("error: " + kind + ": " + detail), kind_(std::move(kind)),
          detail_(std::move(detail)) {}

    const std::string& kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

private:
    std::string kind_;
    std::string detail_;
};

// Compose(first, second) where out(first) != in(second).
class ComposeMismatchError : public Error {
public:
    ComposeMismatchError(std::size_t expected, std::size_t found, const std::string& path)
        : Error("compose-mismatch",
                "expected in=" + std::to_string(expected) + ", found " + std::to_string(found) +
                    " at path " + (path.empty() ? "<root>" : path)),
          expected_(expected), found_(found) {}

    std::size_t expected() const { return expected_; }
    std::size_t found() const { return found_; }

private:
    std::size_t expected_;
    std::size_t found_;
};

// Cast whose declared dimensions disagree with the inner term.
class CastMismatchError : public Error {
public:
    CastMismatchError(const std::string& declared, const std::string& actual, const std::string& path)
        : Error("cast-mismatch",
                "declared " + declared + ", actual " + actual + " at path " +
                    (path.empty() ? "<root>" : path)) {}
};

class DimError : public Error {
public:
    explicit DimError(const std::string& detail) : Error("dim-error", detail) {}
};

class PathInvalidError : public Error {
public:
    explicit PathInvalidError(const std::string& path)
        : Error("path-invalid", "no subterm at path " + (path.empty() ? "<root>" : path)) {}
};

class NoMatchError : public Error {
public:
    NoMatchError(const std::string& expected, const std::string& found)
        : Error("no-match", "expected " + expected + ", found " + found) {}
};

class ShapeMismatchError : public Error {
public:
    explicit ShapeMismatchError(const std::string& detail) : Error("shape-mismatch", detail) {}
};

class SyntaxError : public Error {
public:
    explicit SyntaxError(const std::string& detail) : Error("syntax-error", detail) {}
};

class IndexError : public Error {
public:
    explicit IndexError(const std::string& detail) : Error("index-error", detail) {}
};

} // namespace zx
