#pragma once

#include <optional>
#include <vector>

#include "mcf/algorithms.hpp"
#include "mcf/multiplication.hpp"

namespace mcf {

enum class Verdict { terminated, eventually_periodic, budget_exhausted };

std::string verdict_to_string(Verdict v);

// Full record of one run of the generic driver. States are stored
// projectively normalized (last coordinate 1) and exact, so recurrence is
// literal equality; the reported (N, p) are minimal.
struct Expansion {
    FieldPtr field;
    Algorithm algorithm = Algorithm::jpa;
    std::vector<FieldElement> input;
    std::vector<Step> steps;
    std::vector<State> states;  // states[i] precedes steps[i]
    Verdict verdict = Verdict::budget_exhausted;
    std::size_t preperiod = 0;  // N, meaningful when eventually periodic
    std::size_t period = 0;     // p
    std::size_t budget = 0;
};

constexpr std::size_t kDefaultBudget = 10000;

Expansion expand(const FieldPtr& field, const std::vector<FieldElement>& v, Algorithm algorithm,
                 std::size_t budget = kDefaultBudget);

// R = product of the preperiod matrices, N_rep = product of the repetend,
// M = R N_rep R^{-1}, all exact. Requires an eventually periodic verdict.
struct RepetendMatrices {
    ExactMatrix preperiod_product;  // R
    ExactMatrix repetend_product;   // N_rep
    ExactMatrix matrix;             // M = R N_rep R^{-1}
};
RepetendMatrices repetend_matrix(const Expansion& e);

// The unit with M v = eps v plus the certificate data the caller needs to
// trust it: integer characteristic polynomial with constant term +-1.
struct UnitCertificate {
    FieldElement unit;
    Polynomial char_poly;
    Polynomial min_poly;
    int degree = 0;
    bool norm_is_unit = false;  // |constant term of char_poly| == 1
};
UnitCertificate recover_unit(const Expansion& e);

// Necessary-condition checks against pure periodicity: a totally positive
// conjugate vector excludes it for unimodular weakly-convergent algorithms,
// and for polynomial vectors the norm of y must have sign (-1)^{n-1}.
struct PureExclusionReport {
    std::optional<int> totally_positive_conjugate;  // embedding index
    bool is_polynomial_vector = false;
    bool norm_sign_violation = false;
    Rat generator_norm;
    bool excluded() const { return totally_positive_conjugate.has_value() || norm_sign_violation; }
};
PureExclusionReport pure_exclusion(const FieldPtr& field, const std::vector<FieldElement>& v);

}  // namespace mcf
