#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tubings {

enum class ErrorKind {
    LoopEdge,
    DuplicateLabel,
    UnlabelledBundleEdge,
    InvalidLabel,
    InvalidNode,
    UnknownNode,
    UnknownNodeInEdge,
    UnknownBundle,
    UnknownMember,
    NotInAnyBundle,
    HostMismatch,
    NotEven,
    Disconnected,
    VertexClash,
    FaceBudgetExceeded,
    GraphTooLarge,
    SyntaxError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Thrown by the parser; carries the 1-based source line.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, const std::string& message)
        : Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace tubings
