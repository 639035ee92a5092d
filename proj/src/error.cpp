#include "gradekit/error.hpp"

namespace gradekit {

const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::TrivialUnitGroup: return "TrivialUnitGroup";
    case Errc::LogOfZero: return "LogOfZero";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NotLatinSquare: return "NotLatinSquare";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::NotNormal: return "NotNormal";
    case Errc::TargetMismatch: return "TargetMismatch";
    case Errc::NotSurjective: return "NotSurjective";
    case Errc::OrderTooLargeForIsoSearch: return "OrderTooLargeForIsoSearch";
    case Errc::ZeroEntry: return "ZeroEntry";
    case Errc::ZeroValue: return "ZeroValue";
    case Errc::GroupOrFieldMismatch: return "GroupOrFieldMismatch";
    case Errc::NotACocycle: return "NotACocycle";
    case Errc::IncompatiblePullback: return "IncompatiblePullback";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::InvalidStructure: return "InvalidStructure";
    case Errc::Undetermined: return "Undetermined";
    case Errc::CapExceededUndetermined: return "CapExceededUndetermined";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::ZeroModule: return "ZeroModule";
    case Errc::NotGradedSimple: return "NotGradedSimple";
    case Errc::ComponentNotLine: return "ComponentNotLine";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::SupportNotSubgroup: return "SupportNotSubgroup";
    case Errc::NoUnitInComponent: return "NoUnitInComponent";
    case Errc::NotSemisimple: return "NotSemisimple";
    case Errc::SplitBudgetExceeded: return "SplitBudgetExceeded";
    case Errc::NotBaseModule: return "NotBaseModule";
    case Errc::NotAbsolutelySimple: return "NotAbsolutelySimple";
    case Errc::SplittingFails: return "SplittingFails";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotStronglyGraded: return "NotStronglyGraded";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace gradekit
