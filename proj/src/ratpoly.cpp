#include "delpezzo/ratpoly.hpp"

#include <stdexcept>

namespace delpezzo {

void RatPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatPoly RatPoly::power(int k) {
    if (k < 0) throw std::invalid_argument("ratpoly: negative power");
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = Rational(1);
    return RatPoly(std::move(c));
}

const Rational& RatPoly::lc() const {
    if (c_.empty()) throw std::domain_error("ratpoly: leading coefficient of zero");
    return c_.back();
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(c));
}

RatPoly RatPoly::scaled(const Rational& s) const {
    RatPoly r = *this;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
}

RatPoly RatPoly::monic() const {
    if (is_zero()) throw std::domain_error("ratpoly: monic of zero");
    return scaled(lc().inverse());
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rational> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational((long)i);
    return RatPoly(std::move(c));
}

Rational RatPoly::eval(const Rational& x) const {
    Rational v(0);
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("ratpoly: division by zero");
    RatPoly rem = a;
    if (a.degree() < b.degree()) return {RatPoly(), rem};
    std::vector<Rational> q(a.degree() - b.degree() + 1, Rational(0));
    Rational inv = b.lc().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational f = rem.lc() * inv;
        q[shift] = f;
        std::vector<Rational> sub(shift + b.c_.size(), Rational(0));
        for (size_t i = 0; i < b.c_.size(); ++i) sub[shift + i] = b.c_[i] * f;
        rem = rem - RatPoly(std::move(sub));
    }
    return {RatPoly(std::move(q)), rem};
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

RatPoly RatPoly::interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    RatPoly acc;
    for (size_t i = 0; i < points.size(); ++i) {
        RatPoly basis = RatPoly::constant(Rational(1));
        Rational denom(1);
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * RatPoly({-points[j].first, Rational(1)});
            denom *= points[i].first - points[j].first;
        }
        acc = acc + basis.scaled(points[i].second / denom);
    }
    return acc;
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += c_[i].str();
        } else {
            if (!c_[i].is_one()) out += "(" + c_[i].str() + ")*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace delpezzo
