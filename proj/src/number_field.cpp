#include "delpezzo/number_field.hpp"

#include "delpezzo/intutil.hpp"

#include <stdexcept>

namespace delpezzo {

namespace {

Integer lcm_int(const Integer& a, const Integer& b) {
    Integer g = boost::multiprecision::gcd(a, b);
    return a / g * b;
}

// Scale the monic rational polynomial via t -> u/L so it becomes monic with
// integer coefficients. Returns the integer coefficient vector.
std::vector<Integer> monic_integer_model(const RatPoly& monic, Integer& scale) {
    int n = monic.degree();
    Integer L = 1;
    for (int i = 0; i < n; ++i) L = lcm_int(L, monic.coeff(i).den());
    std::vector<Integer> g(n + 1);
    g[n] = 1;
    Integer Lk = 1;
    for (int i = n - 1; i >= 0; --i) {
        Lk *= L;
        Rational gi = monic.coeff(i) * Rational(Lk);
        if (!gi.is_integer()) throw std::logic_error("monic_integer_model: scaling failed");
        g[i] = gi.num();
    }
    scale = L;
    return g;
}

Integer eval_int(const std::vector<Integer>& g, const Integer& x) {
    Integer v = 0;
    for (size_t i = g.size(); i-- > 0;) v = v * x + g[i];
    return v;
}

bool has_integer_root(const std::vector<Integer>& g) {
    const Integer& d0 = g[0];
    if (d0 == 0) return true;
    for (const Integer& d : positive_divisors(d0)) {
        if (eval_int(g, d) == 0 || eval_int(g, -d) == 0) return true;
    }
    return false;
}

// Monic integer quartic with no integer root: test for a factorization into two
// monic integer quadratics (u^2+pu+q)(u^2+ru+s).
bool quartic_has_quadratic_factor(const std::vector<Integer>& g) {
    const Integer &A = g[3], &B = g[2], &C = g[1], &D = g[0];
    std::vector<Integer> qs;
    for (const Integer& d : positive_divisors(D)) {
        qs.push_back(d);
        qs.push_back(-d);
    }
    for (const Integer& q : qs) {
        Integer s = D / q;
        // p + r = A, p*r = B - q - s
        Integer pr = B - q - s;
        Integer disc = A * A - 4 * pr;
        Integer root;
        if (!is_perfect_square(disc, &root)) continue;
        if ((A + root) % 2 != 0) continue;
        Integer p = (A + root) / 2, r = (A - root) / 2;
        if (p * s + q * r == C || r * s + q * p == C) return true;
    }
    return false;
}

} // namespace

bool is_irreducible_over_q(const RatPoly& monic) {
    int n = monic.degree();
    if (n < 1 || n > 4) throw std::invalid_argument("irreducibility test: degree must be 1..4");
    if (n == 1) return true;
    Integer scale;
    std::vector<Integer> g = monic_integer_model(monic, scale);
    if (has_integer_root(g)) return false;
    if (n == 4 && quartic_has_quadratic_factor(g)) return false;
    return true;
}

NumberField::NumberField(RatPoly modulus, std::string gen)
    : modulus_(std::move(modulus)), gen_(std::move(gen)) {}

FieldPtr NumberField::rationals() {
    static FieldPtr q = create(RatPoly({Rational(0), Rational(1)}));
    return q;
}

FieldPtr NumberField::create(RatPoly modulus, std::string generator_name) {
    if (modulus.is_zero() || modulus.degree() < 1)
        throw std::invalid_argument("number field: modulus must have degree >= 1");
    if (modulus.degree() > 4)
        throw std::invalid_argument("number field: degree must be <= 4");
    RatPoly m = modulus.monic();
    if (!is_irreducible_over_q(m))
        throw std::invalid_argument("number field: modulus is reducible over Q");
    return FieldPtr(new NumberField(std::move(m), std::move(generator_name)));
}

FieldElement NumberField::zero() const {
    return FieldElement(shared_from_this(), std::vector<Rational>(degree(), Rational(0)));
}

FieldElement NumberField::one() const { return from_rational(Rational(1)); }

FieldElement NumberField::from_rational(const Rational& r) const {
    std::vector<Rational> c(degree(), Rational(0));
    c[0] = r;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::generator() const {
    // Degree 1: the generator is the rational root of the modulus.
    if (degree() == 1) return from_rational(-modulus_.coeff(0));
    std::vector<Rational> c(degree(), Rational(0));
    c[1] = Rational(1);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::element(std::vector<Rational> coords) const {
    if ((int)coords.size() != degree())
        throw std::invalid_argument("number field: coordinate count must equal degree");
    return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement NumberField::reduce(const RatPoly& p) const {
    RatPoly r = RatPoly::divmod(p, modulus_).second;
    std::vector<Rational> c(degree(), Rational(0));
    for (int i = 0; i <= r.degree(); ++i) c[i] = r.coeff(i);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), c_(std::move(coords)) {
    if (!field_) throw std::invalid_argument("field element: null field");
    if ((int)c_.size() != field_->degree())
        throw std::invalid_argument("field element: wrong coordinate count");
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() == b.field()) return;
    if (a.field() && b.field() && a.field()->same_as(*b.field())) return;
    throw std::invalid_argument("field elements belong to different fields");
}

bool FieldElement::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational FieldElement::rational_value() const {
    if (!is_rational()) throw std::domain_error("field element: not rational");
    return c_[0];
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    FieldElement r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return a.field()->reduce(a.as_poly() * b.as_poly());
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool FieldElement::operator==(const FieldElement& o) const {
    require_same_field(*this, o);
    return c_ == o.c_;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("field element: inverse of zero");
    // Extended Euclid: u*e + v*m = gcd = 1 in Q[t].
    RatPoly a = as_poly(), b = field_->modulus();
    RatPoly u0 = RatPoly::constant(Rational(1)), u1;
    while (!b.is_zero()) {
        auto [q, r] = RatPoly::divmod(a, b);
        RatPoly u2 = u0 - q * u1;
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // a = gcd (a nonzero constant, since the modulus is irreducible).
    if (a.degree() != 0) throw std::logic_error("field element: gcd with modulus not constant");
    return field_->reduce(u0.scaled(a.coeff(0).inverse()));
}

FieldElement FieldElement::pow(unsigned k) const {
    FieldElement acc = field_->one(), base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Rational FieldElement::norm() const {
    int d = field_->degree();
    // Columns: coordinates of (*this) * t^j.
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d, Rational(0)));
    FieldElement col = *this;
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) m[i][j] = col.c_[i];
        if (j + 1 < d) col = col * field_->generator();
    }
    // Gaussian elimination determinant.
    Rational det(1);
    for (int k = 0; k < d; ++k) {
        int piv = -1;
        for (int i = k; i < d; ++i)
            if (!m[i][k].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return Rational(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        Rational inv = m[k][k].inverse();
        for (int i = k + 1; i < d; ++i) {
            if (m[i][k].is_zero()) continue;
            Rational f = m[i][k] * inv;
            for (int j = k; j < d; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

std::string FieldElement::str() const {
    if (is_rational()) return c_[0].str();
    std::string out;
    const std::string& t = field_->generator_name();
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational mag = c_[i];
        bool neg = mag.sign() < 0;
        if (neg) mag = -mag;
        std::string term;
        if (i == 0) {
            term = mag.str();
        } else {
            term = i == 1 ? t : t + "^" + std::to_string(i);
            if (!mag.is_one()) term = mag.str() + "*" + term;
        }
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

} // namespace delpezzo
