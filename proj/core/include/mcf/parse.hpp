#pragma once

#include <string>
#include <vector>

#include "mcf/field_element.hpp"
#include "mcf/matrix.hpp"
#include "mcf/number_field.hpp"
#include "mcf/polynomial.hpp"

namespace mcf {

// Exact text formats. No floating literals anywhere; coefficients are
// integers or "p/q" fractions. Parse errors carry the offending position.
//
//   rational   := ['+'|'-'] digits ['/' digits]
//   monomial   := coeff ['*' var power] | ['+'|'-'] var power | '(' rational ')' ['*' var power]
//   power      := ['^' digits]
//   polynomial := monomial { ('+'|'-') monomial }
//
// Variables: 'x' in minimal polynomials, 'y' in field elements.

Rat parse_rational(const std::string& text);
Polynomial parse_polynomial(const std::string& text, const std::string& var = "x");
FieldElement parse_element(const FieldPtr& field, const std::string& text,
                           const std::string& var = "y");
// comma- or semicolon-separated element expressions
std::vector<FieldElement> parse_vector(const FieldPtr& field, const std::string& text,
                                       const std::string& var = "y");
// row-major JSON-style [[...],[...]] with string or integer entries
ExactMatrix parse_matrix(const std::string& text);

}  // namespace mcf
