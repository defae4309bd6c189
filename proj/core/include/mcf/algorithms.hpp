#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcf/field_element.hpp"
#include "mcf/matrix.hpp"

namespace mcf {

enum class Algorithm { rcf_add, rcf_mult, jpa, brun, selmer, ajpa };

Algorithm algorithm_from_string(const std::string& name);
std::string algorithm_to_string(Algorithm a);

// One classified step: which set contained the state. The index layout is
// per algorithm:
//   rcf-add      (branch)            branch 1 emits C1, branch 2 emits C2
//   rcf-mult     (branch, k)         matrix C_branch^k
//   jpa          (j2, ..., jn)
//   brun/selmer  (sigma(1..n))       matrix T_{s(n)s(n-1)} resp. T_{s(n)s(1)}
//   ajpa         (i, j, k)           matrix A_{i,j,k}
struct StepLabel {
    Algorithm algorithm;
    std::vector<long> indices;
    // the transvection (i, j) actually emitted, for brun/selmer renderers
    std::string to_string() const;
    bool operator==(const StepLabel& o) const {
        return algorithm == o.algorithm && indices == o.indices;
    }
};

// Positive state vector; the driver owns positivity checking.
using State = std::vector<FieldElement>;

struct Step {
    StepLabel label;
    ExactMatrix matrix;
};

// Each classifier returns the unique set containing the state, or nothing
// when no set does (the membership sets are pairwise disjoint).
std::optional<Step> classify_rcf(const State& v, bool multiplicative);
std::optional<Step> classify_jpa(const State& v);
std::optional<Step> classify_brun(const State& v);
std::optional<Step> classify_selmer(const State& v);
std::optional<Step> classify_ajpa(const State& v);

std::optional<Step> classify(Algorithm a, const State& v);

}  // namespace mcf
