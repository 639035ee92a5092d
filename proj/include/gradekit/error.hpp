#pragma once

#include <stdexcept>
#include <string>

namespace gradekit {

enum class Errc {
    NonPrime,
    ReduciblePolynomial,
    FieldTooLarge,
    DivisionByZero,
    FieldMismatch,
    TrivialUnitGroup,
    LogOfZero,
    NotAssociative,
    NoIdentity,
    NotLatinSquare,
    OrderTooLarge,
    NotNormal,
    TargetMismatch,
    NotSurjective,
    OrderTooLargeForIsoSearch,
    ZeroEntry,
    ZeroValue,
    GroupOrFieldMismatch,
    NotACocycle,
    IncompatiblePullback,
    NotNormalized,
    InvalidStructure,
    Undetermined,
    CapExceededUndetermined,
    AlgebraMismatch,
    ZeroModule,
    NotGradedSimple,
    ComponentNotLine,
    NotInvertible,
    SupportNotSubgroup,
    NoUnitInComponent,
    NotSemisimple,
    SplitBudgetExceeded,
    NotBaseModule,
    NotAbsolutelySimple,
    SplittingFails,
    CapExceeded,
    NotStronglyGraded,
    ParseError,
    InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace gradekit
