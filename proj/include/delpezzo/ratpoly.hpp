// Dense univariate polynomials over the rationals.
#pragma once

#include "delpezzo/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace delpezzo {

// Coefficient vector indexed by power; no trailing zeros; zero poly has empty coeffs.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RatPoly constant(const Rational& r) { return RatPoly({r}); }
    // t^k
    static RatPoly power(int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const { return k >= 0 && k < (int)c_.size() ? c_[k] : Rational(0); }
    const Rational& lc() const;

    RatPoly operator-() const;
    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly scaled(const Rational& s) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    RatPoly monic() const;
    RatPoly derivative() const;
    Rational eval(const Rational& x) const;

    // Quotient and remainder; divisor must be nonzero.
    static std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
    // Monic gcd.
    static RatPoly gcd(RatPoly a, RatPoly b);
    // Unique interpolating polynomial of degree < points.size().
    static RatPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace delpezzo
