#pragma once

#include <stdexcept>
#include <string>

namespace ortho {

enum class ErrorKind {
    LoopEdge,
    DuplicateEdge,
    DegreeExceeded,
    BadVertexId,
    NotThreeConnected,
    TooSmall,
    NotFourGraph,
    NoOrderFound,
    UnclassifiablePair,
    PortConflict,
    CaseAssertionFailed,
    ParseError,
    TooLarge,
    GenerationExhausted,
};

const char* to_string(ErrorKind k);

/// Library-wide exception; kind selects the spec'd error, what() names the offender.
class OrthoError : public std::runtime_error {
public:
    OrthoError(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    /// true for errors that signal a broken internal invariant rather than bad input
    bool internal() const {
        return kind_ == ErrorKind::NoOrderFound || kind_ == ErrorKind::UnclassifiablePair ||
               kind_ == ErrorKind::PortConflict || kind_ == ErrorKind::CaseAssertionFailed;
    }

private:
    ErrorKind kind_;
};

}  // namespace ortho
