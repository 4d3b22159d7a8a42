#include "hermlcd/error.hpp"

namespace hermlcd {

const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::field_too_large: return "FieldTooLarge";
        case errc::no_primitive_polynomial: return "NoPrimitivePolynomial";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::not_in_subfield: return "NotInSubfield";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::singular_matrix: return "Singular";
        case errc::not_coprime: return "NotCoprime";
        case errc::unsupported_m: return "UnsupportedM";
        case errc::out_of_range: return "OutOfRange";
        case errc::zero_constant_term: return "ZeroConstantTerm";
        case errc::no_conjugation_defined: return "NoConjugationDefined";
        case errc::projection_failure: return "ProjectionFailure";
        case errc::not_a_divisor: return "NotADivisor";
        case errc::not_coset_closed: return "NotCosetClosed";
        case errc::criterion_mismatch: return "CriterionMismatch";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::inconsistent_enumerator: return "InconsistentEnumerator";
        case errc::not_hermitian_lcd: return "NotHermitianLcd";
        case errc::degenerate_code: return "DegenerateCode";
        case errc::too_many_factors: return "TooManyFactors";
        case errc::usage_error: return "UsageError";
    }
    return "Unknown";
}

}  // namespace hermlcd
