// Number fields Q[t]/(m(t)) of degree <= 4 with exact power-basis arithmetic.
// Irreducibility of the modulus is verified at construction (rational-root test,
// plus the rational-quadratic-factor test for quartics).
#pragma once

#include "delpezzo/ratpoly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace delpezzo {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::vector<Rational> coords);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rational rational_value() const;

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    bool operator==(const FieldElement& o) const;

    FieldElement inverse() const;
    FieldElement pow(unsigned k) const;

    // Determinant of the multiplication-by-this matrix (field norm to Q).
    Rational norm() const;

    // Canonical text: "p/q" for rational values, otherwise a parenthesized
    // power-basis sum such as "(1/2)+(3)*t".
    std::string str() const;

    RatPoly as_poly() const { return RatPoly(c_); }

private:
    FieldPtr field_;
    std::vector<Rational> c_;
};

class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    // The rationals, handled as the degree-1 field Q[t]/(t).
    static FieldPtr rationals();
    // Modulus is normalized monic; degree must be 1..4; degree >= 2 moduli must
    // be irreducible over Q or construction throws.
    static FieldPtr create(RatPoly modulus, std::string generator_name = "t");

    int degree() const { return modulus_.degree(); }
    const RatPoly& modulus() const { return modulus_; }
    const std::string& generator_name() const { return gen_; }
    bool is_rationals() const { return degree() == 1; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rational(const Rational& r) const;
    FieldElement generator() const;
    FieldElement element(std::vector<Rational> coords) const;
    // Reduce an arbitrary polynomial in the generator mod the modulus.
    FieldElement reduce(const RatPoly& p) const;

    bool same_as(const NumberField& o) const { return modulus_ == o.modulus_; }

private:
    NumberField(RatPoly modulus, std::string gen);
    friend class FieldElement;

    RatPoly modulus_;
    std::string gen_;
};

// True when the monic polynomial (degree 1..4) is irreducible over Q.
bool is_irreducible_over_q(const RatPoly& monic);

void require_same_field(const FieldElement& a, const FieldElement& b);

} // namespace delpezzo
