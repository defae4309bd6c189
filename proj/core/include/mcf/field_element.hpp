#pragma once

#include <string>
#include <vector>

#include "mcf/number_field.hpp"

namespace mcf {

class ExactMatrix;

// Element of a real algebraic number field, stored as exact coordinates in
// the power basis (1, y, ..., y^{n-1}). Immutable value type.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(FieldPtr field, RatVec coords);
    static FieldElement zero(const FieldPtr& field);
    static FieldElement one(const FieldPtr& field);
    static FieldElement rational(const FieldPtr& field, const Rat& q);
    // y itself
    static FieldElement generator(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    const RatVec& coords() const { return coords_; }
    int degree_bound() const { return static_cast<int>(coords_.size()); }
    bool is_zero() const;
    bool is_rational() const;
    // valid only when is_rational()
    Rat rational_value() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const Rat& s) const;
    FieldElement inverse() const;
    FieldElement pow(long k) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // sign under the field's chosen real embedding: -1, 0, +1
    int sign() const;
    // sign under an arbitrary real embedding of the same minimal polynomial
    int sign_at(const RealRoot& root) const;

    // determinant of the multiplication-by-this matrix in the power basis
    Rat norm() const;
    // the multiplication matrix itself (column j = coords of this * y^j)
    ExactMatrix mult_matrix() const;
    // characteristic polynomial of mult_matrix(), monic of degree n
    Polynomial char_poly() const;
    // monic minimal polynomial over Q
    Polynomial min_poly() const;

    Polynomial as_polynomial() const { return Polynomial(coords_); }
    std::string to_string(const std::string& var = "y") const;

  private:
    void check_same_field(const FieldElement& o) const;
    FieldPtr field_;
    RatVec coords_;
};

// largest integer k with k*b <= a; requires b > 0 and a >= 0
Int floor_ratio(const FieldElement& a, const FieldElement& b);

// sign of a under one of real_embeddings() of its field
int embed_sign(const FieldElement& a, const Embedding& e);

}  // namespace mcf
