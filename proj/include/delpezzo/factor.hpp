// Exact factor searches: roots of univariate polynomials inside a number
// field, linear factors of ternary quadratic/cubic forms, and a reducibility
// gate for quaternary cubics. Everything is field-relative: only factors with
// coefficients in the active field are reported.
#pragma once

#include "delpezzo/multipoly.hpp"
#include "delpezzo/ratpoly.hpp"

#include <optional>
#include <vector>

namespace delpezzo {

// Dense univariate polynomial with number-field coefficients.
class KPoly {
public:
    KPoly(FieldPtr field, std::vector<FieldElement> coeffs);
    explicit KPoly(FieldPtr field) : field_(std::move(field)) {}
    static KPoly from_ratpoly(const FieldPtr& field, const RatPoly& p);

    const FieldPtr& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    FieldElement coeff(int k) const;
    const FieldElement& lc() const;

    friend KPoly operator+(const KPoly& a, const KPoly& b);
    friend KPoly operator-(const KPoly& a, const KPoly& b);
    friend KPoly operator*(const KPoly& a, const KPoly& b);
    KPoly scaled(const FieldElement& s) const;
    bool operator==(const KPoly& o) const { return c_ == o.c_; }

    KPoly monic() const;
    KPoly derivative() const;
    FieldElement eval(const FieldElement& x) const;
    // p(t + delta)
    KPoly shifted(const FieldElement& delta) const;

    static std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b);
    static KPoly gcd(KPoly a, KPoly b);

private:
    void trim();
    FieldPtr field_;
    std::vector<FieldElement> c_;
};

// Distinct rational roots.
std::vector<Rational> rational_roots(const RatPoly& p);

// Distinct roots of p lying in its coefficient field (degree of p arbitrary,
// intended for degree <= 4). Complete over the active field.
std::vector<FieldElement> roots_in_field(const KPoly& p);

// Square roots within the field; only degree <= 2 fields are supported here
// (higher-degree fields go through the general root machinery).
std::optional<FieldElement> sqrt_in_field(const FieldElement& x);

struct LinearFactor {
    std::vector<FieldElement> coeffs; // normalized: first nonzero coefficient is 1
    int multiplicity = 1;
};

struct LinearFactorization {
    std::vector<LinearFactor> factors;
    MultiPoly residual; // product of the factors times this equals the input
};

// All linear factors (over the active field) of a homogeneous ternary form of
// degree 1..3, with multiplicity, in a canonical order.
LinearFactorization linear_factors(const MultiPoly& ternary_form);
LinearFactorization linear_factors(const HomogeneousForm& form);

// True when the homogeneous cubic in four variables has a linear factor over
// the active field (i.e. the cubic surface it cuts out is reducible).
bool has_linear_factor_quaternary(const MultiPoly& form);

// Helpers shared with other modules.
bool field_elem_less(const FieldElement& a, const FieldElement& b);
MultiPoly linear_combination(const std::vector<FieldElement>& coeffs,
                             const std::vector<MultiPoly>& vars);

} // namespace delpezzo
