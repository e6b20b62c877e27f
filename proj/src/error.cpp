#include "pathhom/error.hpp"

namespace pathhom {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::LoopArrow: return "LoopArrow";
        case ErrorCode::DuplicateArrow: return "DuplicateArrow";
        case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
        case ErrorCode::EmptyVertexSet: return "EmptyVertexSet";
        case ErrorCode::DuplicateVertex: return "DuplicateVertex";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::LabelCollision: return "LabelCollision";
        case ErrorCode::NotAMap: return "NotAMap";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::IrregularInput: return "IrregularInput";
        case ErrorCode::NotClusterChain: return "NotClusterChain";
        case ErrorCode::DegreeZero: return "DegreeZero";
        case ErrorCode::NotTailChain: return "NotTailChain";
        case ErrorCode::NotHeadChain: return "NotHeadChain";
        case ErrorCode::WrongDegree: return "WrongDegree";
        case ErrorCode::NotAllowedChain: return "NotAllowedChain";
        case ErrorCode::NoIntegerSolution: return "NoIntegerSolution";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorCode::NotAsymmetric: return "NotAsymmetric";
        case ErrorCode::ChainMapViolation: return "ChainMapViolation";
        case ErrorCode::InvalidTheory: return "InvalidTheory";
        case ErrorCode::InternalConsistency: return "InternalConsistency";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorCode::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace pathhom
