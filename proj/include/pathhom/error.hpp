#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pathhom {

enum class ErrorCode {
    // digraph validation
    LoopArrow,
    DuplicateArrow,
    UnknownEndpoint,
    EmptyVertexSet,
    DuplicateVertex,
    UnknownVertex,
    LabelCollision,
    NotAMap,
    // chains
    IndexOutOfRange,
    IrregularInput,
    NotClusterChain,
    DegreeZero,
    NotTailChain,
    NotHeadChain,
    WrongDegree,
    NotAllowedChain,
    // linalg
    NoIntegerSolution,
    DimensionMismatch,
    // homology
    DegreeOutOfRange,
    NotAsymmetric,
    ChainMapViolation,
    InvalidTheory,
    InternalConsistency,
    // io
    ParseError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Text-format or structured-format parse failure, located at 1-based line/column.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace pathhom
