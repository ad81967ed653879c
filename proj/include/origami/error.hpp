#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace origami {

enum class ErrorKind {
    InvalidNumber,
    CoincidentPoints,
    ConcentricCircles,
    IdenticalLines,
    DegenerateConfiguration,
    NotQuadratic,
    NotCubic,
    NotQuartic,
    OutOfRange,
    UnsupportedDegree,
    EmptyTrace,
    BranchUnavailable,
    AssertionFailed,
    UndefinedIdentifier,
    DuplicateName,
    TypeMismatch,
    MalformedTrace,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace origami
