// Exact rational numbers. Arbitrary precision, always reduced, denominator > 0.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace delpezzo {

using Integer = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(const Integer& n) : num_(n), den_(1) {}
    Rational(Integer n, Integer d);

    static Rational parse(const std::string& text);

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    Rational inverse() const;
    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // Largest integer <= *this, as an Integer.
    Integer floor() const;

    // Canonical form "p" or "p/q", q > 1.
    std::string str() const;

    double to_double() const;

private:
    void reduce();
    Integer num_, den_;
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

} // namespace delpezzo
