#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mcf/expansion.hpp"
#include "mcf/multiplication.hpp"

namespace mcf {

// User-supplied fundamental units, verified against the unit-group
// characterization N(eps) = +-1 and counted against the Dirichlet rank
// r1 + r2 - 1. Units are never computed here.
struct UnitSystem {
    FieldPtr field;
    std::vector<FieldElement> units;
    bool verified = false;
    int rank = 0;
};

UnitSystem verify_units(const FieldPtr& field, const std::vector<FieldElement>& units);

// First column of the transposed multiplication matrix of
// eps = b1 + b2*y + b3*x over the basis (x, y, 1), from the closed formulas.
std::array<Rat, 3> first_column_from_unit(const Rat& g0, const Rat& g1, const Rat& g2,
                                          const Rat& a0, const Rat& a1, const Rat& a2,
                                          const Rat& b1, const Rat& b2, const Rat& b3);

// sign * prod_i T_i^{m_i} with T_i the transposed multiplication matrices
// of the units in the given basis.
struct Candidate {
    int sign = 1;
    std::vector<long> exponents;
    ExactMatrix matrix;
};

struct CandidateFilters {
    bool integer_entries = true;
    bool det_plus_one = true;
    bool primitive = false;
};

struct CandidateEnumeration {
    std::vector<Candidate> candidates;
    // exponent vectors visited (zero vector excluded: the identity is never
    // a repetend)
    std::size_t raw_exponent_count = 0;
    // signed grid points rejected, by the filter that rejected them
    std::size_t rejected_non_integer = 0;
    std::size_t rejected_det = 0;
    std::size_t rejected_non_primitive = 0;
};

// All candidates with |m_i| <= bound, in lexicographic exponent order, sign
// +1 before -1. Odd-degree fields only; the +-1 sign form needs it.
CandidateEnumeration enumerate_candidates(const FieldBasis& basis, const UnitSystem& units,
                                          long bound, const CandidateFilters& filters = {});

// Finds (sign, exponents) with M = sign * prod T_i^{m_i}: a 100-digit
// logarithmic guess solved from real-embedding logs, verified exactly, with
// an exhaustive |m_i| <= bound fallback. Approximation never decides.
std::optional<Candidate> match_repetend(const ExactMatrix& m, const FieldBasis& basis,
                                        const UnitSystem& units, long bound);

// Parametric AJPA families: the vector, its field, and the predicted label
// sequence (preperiod then repetend).
struct FamilyPrediction {
    FieldPtr field;
    std::vector<FieldElement> vector;
    std::vector<StepLabel> preperiod_labels;
    std::vector<StepLabel> repetend_labels;
};

// Family x^3 + s x^2 + t x - 1 with vector (y^2 + f y + r, y, 1); validates
// every side condition exactly and reports the violated one by name.
FamilyPrediction ajpa_family(long s, long t, long f, long r);

// The cube-root family ((m^3+1)^{2/3} - m^2, (m^3+1)^{1/3} - m, 1): period 6
// at m = 1, period 3 for m >= 2.
FamilyPrediction tamura_vector(long m);

// Desk-scale brute force over integer coordinate boxes |c_i| <= bound.
// Not exhaustive and not a substitute for a proper unit-group algorithm;
// +-1 is skipped.
std::vector<FieldElement> search_units_box(const FieldPtr& field, long bound = 10);

}  // namespace mcf
