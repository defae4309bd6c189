#pragma once

#include <stdexcept>
#include <string>

namespace mcf {

// Everything a caller can provoke with bad input carries a code so tests
// and the CLI can tell validation failures from internal bugs.
enum class errc {
    not_squarefree,
    no_real_root_in_interval,
    ambiguous_interval,
    reducible,
    division_by_zero,
    field_mismatch,
    nonpositive_denominator,
    index_out_of_range,
    equal_indices,
    singular_matrix,
    negative_entry,
    non_integer_entry,
    basis_mismatch,
    not_a_multiplication_matrix,
    degenerate_eigenvalue,
    degenerate_gamma,
    singular_pivot,
    zero_b3,
    wrong_dimension,
    nonpositive_input,
    not_periodic,
    not_a_basis,
    not_a_unit,
    wrong_unit_count,
    constraint_violated,
    invalid_m,
    even_degree_unsupported,
    dimension_mismatch,
    parse_error,
    invalid_argument,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_squarefree: return "NotSquarefree";
        case errc::no_real_root_in_interval: return "NoRealRootInInterval";
        case errc::ambiguous_interval: return "AmbiguousInterval";
        case errc::reducible: return "Reducible";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::nonpositive_denominator: return "NonpositiveDenominator";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::equal_indices: return "EqualIndices";
        case errc::singular_matrix: return "SingularMatrix";
        case errc::negative_entry: return "NegativeEntry";
        case errc::non_integer_entry: return "NonIntegerEntry";
        case errc::basis_mismatch: return "BasisMismatch";
        case errc::not_a_multiplication_matrix: return "NotAMultiplicationMatrix";
        case errc::degenerate_eigenvalue: return "DegenerateEigenvalue";
        case errc::degenerate_gamma: return "DegenerateGamma";
        case errc::singular_pivot: return "SingularPivot";
        case errc::zero_b3: return "ZeroB3";
        case errc::wrong_dimension: return "WrongDimension";
        case errc::nonpositive_input: return "NonpositiveInput";
        case errc::not_periodic: return "NotPeriodic";
        case errc::not_a_basis: return "NotABasis";
        case errc::not_a_unit: return "NotAUnit";
        case errc::wrong_unit_count: return "WrongUnitCount";
        case errc::constraint_violated: return "ConstraintViolated";
        case errc::invalid_m: return "InvalidM";
        case errc::even_degree_unsupported: return "EvenDegreeUnsupported";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::parse_error: return "ParseError";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "Error";
}

}  // namespace mcf
