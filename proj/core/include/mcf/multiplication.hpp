#pragma once

#include <array>
#include <vector>

#include "mcf/field_element.hpp"
#include "mcf/matrix.hpp"

namespace mcf {

// Ordered basis of the field over Q. change_of_basis holds the power-basis
// coordinates of element j in column j and must be invertible.
class FieldBasis {
  public:
    FieldBasis(FieldPtr field, std::vector<FieldElement> elements);

    const FieldPtr& field() const { return field_; }
    const std::vector<FieldElement>& elements() const { return elements_; }
    const ExactMatrix& change_of_basis() const { return b_; }
    const ExactMatrix& change_of_basis_inv() const { return binv_; }
    std::size_t dim() const { return elements_.size(); }

  private:
    FieldPtr field_;
    std::vector<FieldElement> elements_;
    ExactMatrix b_, binv_;
};

// Transposed multiplication matrix: the M with M v = lambda v.
ExactMatrix t_matrix(const FieldBasis& basis, const FieldElement& lambda);

// Inverse direction: the unique lambda with M v = lambda v, verified on
// every component.
FieldElement eigen_element(const ExactMatrix& m, const FieldBasis& basis);

// n matrices rebuilding a transposed multiplication matrix from its pivot
// column: mats[i] * M_col(pivot) = M_col(i). pivot is 1-based.
struct QTuple {
    std::size_t pivot = 1;
    std::vector<ExactMatrix> mats;
};

// Recovers the tuple from the powers M, M^2, ..., M^n; M must be the
// transposed multiplication matrix of an element of full degree n.
QTuple q_from_powers(const ExactMatrix& m, std::size_t pivot);

// Closed form for the polynomial basis (y^{n-1}, ..., y, 1) and pivot 1,
// entries 1 / +-alpha_k / 0 from the minimal polynomial coefficients.
QTuple q_closed_form_poly_basis(const NumberField& field);
QTuple q_closed_form_poly_basis(const Polynomial& minpoly);

// Conjugation of a tuple under a basis permutation: for w = P v the tuple
// of (pi(pivot), w) has component pi(i) equal to P mats[i] P^{-1}.
QTuple permute_qtuple(const QTuple& q, const ExactMatrix& p);

// Matrix whose i-th column is mats[i] * column.
ExactMatrix apply_q(const QTuple& q, const std::vector<Rat>& column);

// The cubic entry system (b1..b3, c1..c6) read off a tuple in the template
// shape of its pivot.
struct CubicEntries {
    Rat b1, b2, b3, c1, c2, c3, c4, c5, c6;
};
CubicEntries cubic_entries(const QTuple& q);

// The three same-basis tuples Q_{1,v}, Q_{2,v}, Q_{3,v} for v = (x, y, 1),
// x = g0 + g1 y + g2 y^2 and y a root of y^3 + a2 y^2 + a1 y + a0. Pivot 1
// uses the closed entry forms; pivots 2 and 3 come from the renormalized
// generators 1/x and x/y and the permutation conjugation.
std::array<QTuple, 3> q_cubic(const Rat& a0, const Rat& a1, const Rat& a2, const Rat& g0,
                              const Rat& g1, const Rat& g2);

// Sign tests of the entry systems: y < 1, x > 1, x < y. Valid over complex
// cubic fields only; the caller asserts r2 = 1 (a tuple alone cannot).
struct CubicPredicates {
    bool y_lt_1 = false;
    bool x_gt_1 = false;
    bool x_lt_y = false;
};
CubicPredicates cubic_predicates(const QTuple& q1, const QTuple& q2, const QTuple& q3);

// |N(y)/N(1)|, |N(1)/N(x)|, |N(x)/N(y)| as |c5/b3| per tuple.
std::array<Rat, 3> cubic_norm_ratios(const QTuple& q1, const QTuple& q2, const QTuple& q3);

}  // namespace mcf
