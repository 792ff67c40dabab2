// Text input for polynomials: sums of terms like "3/2*x^2*y" with optional
// parenthesized subexpressions and the field generator as a symbol. Output of
// MultiPoly::str / HomogeneousForm::str parses back to an equal polynomial.
#pragma once

#include "delpezzo/multipoly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace delpezzo {

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

MultiPoly parse_polynomial(const std::string& text, const FieldPtr& field,
                           const std::vector<std::string>& variables);

HomogeneousForm parse_form(const std::string& text, const FieldPtr& field,
                           const std::vector<std::string>& variables);

// Constant expression over the field, e.g. "1/2" or "(1/2)+(3)*t".
FieldElement parse_field_element(const std::string& text, const FieldPtr& field);

// "a, b, c" or "a : b : c" into field elements.
std::vector<FieldElement> parse_point(const std::string& text, const FieldPtr& field, int arity);

} // namespace delpezzo
