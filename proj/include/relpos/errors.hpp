#pragma once

#include <stdexcept>
#include <string>

namespace relpos {

enum class ErrorCode {
    bad_input,
    budget_exceeded,
    occurrence_not_found,
    no_fixed_point,
    undetermined_region,
    malformed_supertile,
    non_primitive,
    singular_matrix,
    field_mismatch,
    arithmetic_overflow,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct BadInput : Error {
    explicit BadInput(const std::string& what) : Error(ErrorCode::bad_input, what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(ErrorCode::budget_exceeded, what) {}
};

struct OccurrenceNotFound : Error {
    explicit OccurrenceNotFound(const std::string& what)
        : Error(ErrorCode::occurrence_not_found, what) {}
};

struct NoFixedPoint : Error {
    explicit NoFixedPoint(const std::string& what) : Error(ErrorCode::no_fixed_point, what) {}
};

struct UndeterminedRegion : Error {
    explicit UndeterminedRegion(const std::string& what)
        : Error(ErrorCode::undetermined_region, what) {}
};

struct MalformedSupertile : Error {
    explicit MalformedSupertile(const std::string& what)
        : Error(ErrorCode::malformed_supertile, what) {}
};

struct NonPrimitive : Error {
    explicit NonPrimitive(const std::string& what) : Error(ErrorCode::non_primitive, what) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what) : Error(ErrorCode::singular_matrix, what) {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& what) : Error(ErrorCode::field_mismatch, what) {}
};

struct ArithmeticOverflow : Error {
    explicit ArithmeticOverflow(const std::string& what)
        : Error(ErrorCode::arithmetic_overflow, what) {}
};

}  // namespace relpos
