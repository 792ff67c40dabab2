// Sparse multivariate polynomials over a number field, and homogeneous forms.
#pragma once

#include "delpezzo/number_field.hpp"

#include <map>
#include <string>
#include <vector>

namespace delpezzo {

// Exponent vectors are fixed-length (one slot per variable), compared
// lexicographically by std::map. Zero coefficients are never stored.
class MultiPoly {
public:
    using Terms = std::map<std::vector<int>, FieldElement>;

    MultiPoly(FieldPtr field, int nvars);
    static MultiPoly constant(const FieldPtr& field, int nvars, const FieldElement& c);
    static MultiPoly constant(const FieldPtr& field, int nvars, const Rational& c);
    static MultiPoly variable(const FieldPtr& field, int nvars, int index);

    const FieldPtr& field() const { return field_; }
    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;
    FieldElement coeff(const std::vector<int>& exps) const;
    // Lowest total degree among terms; -1 for zero.
    int order() const;
    // Sum of the terms of exactly the given total degree.
    MultiPoly homogeneous_part(int degree) const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const FieldElement& s) const;
    MultiPoly scaled(const Rational& s) const;
    bool operator==(const MultiPoly& o) const;

    void add_term(const std::vector<int>& exps, const FieldElement& c);

    FieldElement evaluate(const std::vector<FieldElement>& point) const;
    MultiPoly partial(int index) const;
    // Compose: substitute images[i] for variable i. All images must share a
    // field and variable count.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;
    MultiPoly pow(unsigned k) const;

    // Exact division by a single variable^k; throws if not divisible.
    MultiPoly divide_by_variable_power(int index, int k) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    FieldPtr field_;
    int nvars_ = 0;
    Terms terms_;
};

// A nonzero homogeneous polynomial with named variables.
class HomogeneousForm {
public:
    HomogeneousForm(MultiPoly p, std::vector<std::string> variables);

    const MultiPoly& poly() const { return p_; }
    const std::vector<std::string>& variables() const { return vars_; }
    int degree() const { return p_.total_degree(); }
    const FieldPtr& field() const { return p_.field(); }

    FieldElement evaluate(const std::vector<FieldElement>& point) const { return p_.evaluate(point); }
    MultiPoly partial(int index) const { return p_.partial(index); }

    std::string str() const { return p_.str(vars_); }

private:
    MultiPoly p_;
    std::vector<std::string> vars_;
};

} // namespace delpezzo
