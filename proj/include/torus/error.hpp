#pragma once

#include <stdexcept>
#include <string>

namespace torus {

enum class ErrorKind {
    Parse,
    RankDeficient,
    OutOfRange,
    NotAdmissible,
    Unclassifiable,
    OutsideOpenHypersimplex,
    Unsupported,
    NotMainStratum,
    DegenerateTriple,
    CenterWithoutDirection,
    BoundaryNotSquareZero,
    InexactSequence,
    AmbiguousExtension,
    Usage,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace torus
