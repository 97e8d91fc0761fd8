#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nok {

enum class ErrorKind {
    EmptyGeneratorSet,
    DimensionMismatch,
    NonPositiveExponent,
    EmptyList,
    NotSquarefree,
    EmptyPrime,
    UnitIdeal,
    NotLinearPowerType,
    EmptyInput,
    InfeasibleSystem,
    MissingOrthantConstraints,
    NotUpSet,
    NonPositiveScale,
    NoVertices,
    PointNotInPolyhedron,
    BoundTooSmall,
    UnsupportedIdealClass,
    NotProvenNoetherian,
    NotGradedFamily,
    NoCandidate,
    Overflow,
    VertexLimitExceeded,
    ParseError,
    UnknownVariable,
    NonPositiveMultiplicity,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so that front ends can
// map it onto exit codes without parsing messages.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

class ParseError : public Error {
  public:
    ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string &what)
        : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                          what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what) { throw Error(kind, what); }

} // namespace nok
