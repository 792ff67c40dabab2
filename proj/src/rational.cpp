#include "delpezzo/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace delpezzo {

namespace {
Integer gcd_int(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer r = a % b;
        a = b;
        b = r;
    }
    return a;
}
} // namespace

Rational::Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Integer g = gcd_int(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    auto check_digits = [](const std::string& part) {
        if (part.empty()) throw std::invalid_argument("rational: malformed number");
        size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw std::invalid_argument("rational: malformed number");
        for (; i < part.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(part[i])))
                throw std::invalid_argument("rational: unexpected character in '" + part + "'");
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        check_digits(s);
        return Rational(Integer(s));
    }
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    check_digits(n);
    check_digits(d);
    return Rational(Integer(n), Integer(d));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    Integer lhs = num_ * o.den_, rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::inverse() const {
    if (num_ == 0) throw std::domain_error("rational: inverse of zero");
    return Rational(den_, num_);
}

Integer Rational::floor() const {
    Integer q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) q -= 1;
    return q;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

} // namespace delpezzo
