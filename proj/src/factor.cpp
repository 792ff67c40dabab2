#include "delpezzo/factor.hpp"

#include "delpezzo/intutil.hpp"

#include <algorithm>
#include <stdexcept>

namespace delpezzo {

KPoly::KPoly(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
}

void KPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

KPoly KPoly::from_ratpoly(const FieldPtr& field, const RatPoly& p) {
    std::vector<FieldElement> c;
    c.reserve(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) c.push_back(field->from_rational(p.coeff(i)));
    return KPoly(field, std::move(c));
}

FieldElement KPoly::coeff(int k) const {
    if (k < 0 || k >= (int)c_.size()) return field_->zero();
    return c_[k];
}

const FieldElement& KPoly::lc() const {
    if (c_.empty()) throw std::domain_error("kpoly: leading coefficient of zero");
    return c_.back();
}

KPoly operator+(const KPoly& a, const KPoly& b) {
    std::vector<FieldElement> c;
    size_t n = std::max(a.c_.size(), b.c_.size());
    c.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        FieldElement x = a.field_->zero();
        if (i < a.c_.size()) x = x + a.c_[i];
        if (i < b.c_.size()) x = x + b.c_[i];
        c.push_back(x);
    }
    return KPoly(a.field_, std::move(c));
}

KPoly operator-(const KPoly& a, const KPoly& b) {
    return a + b.scaled(a.field_->from_rational(Rational(-1)));
}

KPoly operator*(const KPoly& a, const KPoly& b) {
    if (a.is_zero() || b.is_zero()) return KPoly(a.field_);
    std::vector<FieldElement> c(a.c_.size() + b.c_.size() - 1, a.field_->zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return KPoly(a.field_, std::move(c));
}

KPoly KPoly::scaled(const FieldElement& s) const {
    if (s.is_zero()) return KPoly(field_);
    std::vector<FieldElement> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x * s);
    return KPoly(field_, std::move(c));
}

KPoly KPoly::monic() const {
    if (is_zero()) throw std::domain_error("kpoly: monic of zero");
    return scaled(lc().inverse());
}

KPoly KPoly::derivative() const {
    if (c_.size() <= 1) return KPoly(field_);
    std::vector<FieldElement> c;
    c.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        c.push_back(c_[i] * field_->from_rational(Rational((long)i)));
    return KPoly(field_, std::move(c));
}

FieldElement KPoly::eval(const FieldElement& x) const {
    FieldElement v = field_->zero();
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

KPoly KPoly::shifted(const FieldElement& delta) const {
    // Horner: fold coefficients into multiples of (t + delta).
    KPoly acc(field_);
    KPoly lin(field_, {delta, field_->one()});
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * lin;
        acc = acc + KPoly(field_, {c_[i]});
    }
    return acc;
}

std::pair<KPoly, KPoly> KPoly::divmod(const KPoly& a, const KPoly& b) {
    if (b.is_zero()) throw std::domain_error("kpoly: division by zero");
    KPoly rem = a;
    if (a.degree() < b.degree()) return {KPoly(a.field_), rem};
    std::vector<FieldElement> q(a.degree() - b.degree() + 1, a.field_->zero());
    FieldElement inv = b.lc().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        FieldElement f = rem.lc() * inv;
        q[shift] = f;
        std::vector<FieldElement> sub(shift + b.c_.size(), a.field_->zero());
        for (size_t i = 0; i < b.c_.size(); ++i) sub[shift + i] = b.c_[i] * f;
        rem = rem - KPoly(a.field_, std::move(sub));
    }
    return {KPoly(a.field_, std::move(q)), rem};
}

KPoly KPoly::gcd(KPoly a, KPoly b) {
    while (!b.is_zero()) {
        KPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

bool field_elem_less(const FieldElement& a, const FieldElement& b) {
    const auto& x = a.coords();
    const auto& y = b.coords();
    for (size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (x[i] < y[i]) return true;
        if (y[i] < x[i]) return false;
    }
    return x.size() < y.size();
}

// ---------------------------------------------------------------------------
// Rational roots.

namespace {

RatPoly deflate_root(const RatPoly& p, const Rational& r) {
    return RatPoly::divmod(p, RatPoly({-r, Rational(1)})).first;
}

// Primitive integer coefficients of p scaled by the lcm of denominators.
std::vector<Integer> integer_model(const RatPoly& p) {
    Integer L = 1;
    for (int i = 0; i <= p.degree(); ++i) {
        const Integer& d = p.coeff(i).den();
        Integer g = boost::multiprecision::gcd(L, d);
        L = L / g * d;
    }
    std::vector<Integer> out(p.degree() + 1);
    Integer content = 0;
    for (int i = 0; i <= p.degree(); ++i) {
        Rational c = p.coeff(i) * Rational(L);
        out[i] = c.num();
        content = boost::multiprecision::gcd(content, out[i] < 0 ? Integer(-out[i]) : out[i]);
    }
    if (content > 1)
        for (auto& c : out) c /= content;
    return out;
}

} // namespace

std::vector<Rational> rational_roots(const RatPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rational> roots;
    RatPoly q = p;
    // Strip roots at zero.
    if (q.coeff(0).is_zero()) {
        roots.push_back(Rational(0));
        while (q.coeff(0).is_zero() && q.degree() > 0) q = deflate_root(q, Rational(0));
    }
    if (q.degree() < 1) return roots;
    std::vector<Integer> g = integer_model(q);
    const Integer& a0 = g.front();
    const Integer& an = g.back();
    for (const Integer& num : positive_divisors(a0)) {
        for (const Integer& den : positive_divisors(an)) {
            if (boost::multiprecision::gcd(num, den) != 1) continue;
            for (int sign : {1, -1}) {
                Rational cand(sign > 0 ? num : Integer(-num), den);
                if (q.eval(cand).is_zero()) {
                    if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ---------------------------------------------------------------------------
// Square roots in fields of degree <= 2.

namespace {

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    Integer n, d;
    if (!is_perfect_square(r.num(), &n)) return std::nullopt;
    if (!is_perfect_square(r.den(), &d)) return std::nullopt;
    return Rational(n, d);
}

} // namespace

std::optional<FieldElement> sqrt_in_field(const FieldElement& x) {
    const FieldPtr& F = x.field();
    int d = F->degree();
    if (d == 1) {
        auto r = rational_sqrt(x.coords()[0]);
        if (!r) return std::nullopt;
        return F->from_rational(*r);
    }
    if (d != 2) throw std::invalid_argument("sqrt_in_field: only degree <= 2 fields supported");
    // theta^2 = -p*theta - q for modulus t^2 + p t + q.
    Rational p = F->modulus().coeff(1), q = F->modulus().coeff(0);
    Rational d0 = x.coords()[0], d1 = x.coords()[1];
    auto try_uv = [&](const Rational& u, const Rational& v) -> std::optional<FieldElement> {
        FieldElement y = F->element({u, v});
        if (y * y == x) return y;
        return std::nullopt;
    };
    if (d1.is_zero()) {
        if (auto u = rational_sqrt(d0)) return F->from_rational(*u);
        // y = u + v*theta with u = p*v/2.
        Rational denom = p * p - Rational(4) * q;
        if (!denom.is_zero()) {
            if (auto v = rational_sqrt(Rational(4) * d0 / denom)) {
                for (const Rational& vv : {*v, -*v}) {
                    if (auto y = try_uv(p * vv / Rational(2), vv)) return y;
                }
            }
        }
        return std::nullopt;
    }
    // v != 0; w = v^2 satisfies (p^2-4q) w^2 + (2p d1 - 4 d0) w + d1^2 = 0.
    Rational A = p * p - Rational(4) * q;
    Rational B = Rational(2) * p * d1 - Rational(4) * d0;
    Rational C = d1 * d1;
    std::vector<Rational> ws;
    if (A.is_zero()) {
        if (!B.is_zero()) ws.push_back(-C / B);
    } else {
        Rational disc = B * B - Rational(4) * A * C;
        if (auto sd = rational_sqrt(disc)) {
            ws.push_back((-B + *sd) / (Rational(2) * A));
            ws.push_back((-B - *sd) / (Rational(2) * A));
        }
    }
    for (const Rational& w : ws) {
        auto v = rational_sqrt(w);
        if (!v || v->is_zero()) continue;
        for (const Rational& vv : {*v, -*v}) {
            Rational u = (d1 + p * vv * vv) / (Rational(2) * vv);
            if (auto y = try_uv(u, vv)) return y;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Roots in the field: squarefree norm + bounded factor search over Z[t].

namespace {

// Degree-r integer factors of the primitive integer polynomial Z (no rational
// roots), via interpolation through divisors of evaluations.
std::vector<RatPoly> integer_factors_of_degree(const RatPoly& Z, int r) {
    std::vector<Rational> pts;
    for (long v = 0; (int)pts.size() < r + 1; v = v > 0 ? -v : -v + 1) {
        Rational x((long)v);
        if (!Z.eval(x).is_zero()) pts.push_back(x);
        if (v > 100) throw std::logic_error("factor search: could not pick evaluation points");
    }
    std::vector<std::vector<Integer>> divs(r + 1);
    size_t total = 1;
    const size_t cap = 400000;
    for (int i = 0; i <= r; ++i) {
        Rational v = Z.eval(pts[i]);
        if (!v.is_integer()) throw std::logic_error("factor search: non-integer evaluation");
        for (const Integer& d : positive_divisors(v.num())) {
            divs[i].push_back(d);
            if (i > 0) divs[i].push_back(-d); // sign fixed on the first point
        }
        total *= divs[i].size();
        if (total > cap) throw std::runtime_error("factor search: candidate count beyond supported size");
    }
    std::vector<RatPoly> found;
    std::vector<size_t> idx(r + 1, 0);
    while (true) {
        std::vector<std::pair<Rational, Rational>> sample;
        for (int i = 0; i <= r; ++i) sample.push_back({pts[i], Rational(divs[i][idx[i]])});
        RatPoly h = RatPoly::interpolate(sample);
        if (h.degree() == r) {
            bool integral = true;
            for (int i = 0; i <= h.degree() && integral; ++i)
                if (!h.coeff(i).is_integer()) integral = false;
            if (integral && RatPoly::divmod(Z, h).second.is_zero()) {
                RatPoly hm = h.monic();
                if (std::find(found.begin(), found.end(), hm) == found.end()) found.push_back(hm);
            }
        }
        int k = r;
        while (k >= 0 && ++idx[k] == divs[k].size()) idx[k--] = 0;
        if (k < 0) break;
    }
    return found;
}

std::vector<FieldElement> sorted_unique(std::vector<FieldElement> v) {
    std::sort(v.begin(), v.end(), field_elem_less);
    v.erase(std::unique(v.begin(), v.end(), [](const FieldElement& a, const FieldElement& b) {
                return a == b;
            }),
            v.end());
    return v;
}

} // namespace

std::vector<FieldElement> roots_in_field(const KPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("roots_in_field: zero polynomial");
    const FieldPtr& F = p.field();
    std::vector<FieldElement> roots;
    if (p.degree() < 1) return roots;

    if (F->degree() == 1) {
        std::vector<Rational> cs;
        for (const auto& c : p.coeffs()) cs.push_back(c.coords()[0]);
        for (const Rational& r : rational_roots(RatPoly(std::move(cs))))
            roots.push_back(F->from_rational(r));
        return sorted_unique(std::move(roots));
    }

    KPoly pm = p.monic();
    // Linear: immediate.
    if (pm.degree() == 1) return {-(pm.coeff(0))};

    // Squarefree part.
    KPoly sq = KPoly::gcd(pm, pm.derivative());
    KPoly f = sq.degree() > 0 ? KPoly::divmod(pm, sq).first.monic() : pm;

    // Quadratic over a degree <= 2 field: quadratic formula.
    if (f.degree() == 2 && F->degree() <= 2) {
        FieldElement b = f.coeff(1), c = f.coeff(0);
        FieldElement disc = b * b - F->from_rational(Rational(4)) * c;
        if (auto s = sqrt_in_field(disc)) {
            FieldElement half = F->from_rational(Rational(Integer(1), Integer(2)));
            roots.push_back((-b + *s) * half);
            roots.push_back((-b - *s) * half);
        }
        return sorted_unique(std::move(roots));
    }

    // Squarefree norm: N_s(t) = Norm(f(t - s*theta)), s chosen so N_s is squarefree.
    int d = F->degree(), D = f.degree();
    FieldElement theta = F->generator();
    for (int s = 0; s <= 60; ++s) {
        FieldElement shift = theta * F->from_rational(Rational((long)s));
        int deg_norm = d * D;
        std::vector<std::pair<Rational, Rational>> samples;
        for (long v = 0; (int)samples.size() < deg_norm + 1; v = v > 0 ? -v : -v + 1) {
            Rational t0((long)v);
            FieldElement arg = F->from_rational(t0) - shift;
            samples.push_back({t0, f.eval(arg).norm()});
        }
        RatPoly N = RatPoly::interpolate(samples);
        if (N.degree() != deg_norm) continue;
        if (RatPoly::gcd(N, N.derivative()).degree() != 0) continue;

        // Strip rational linear factors (they cannot carry degree-d factors).
        RatPoly Zr = N;
        for (const Rational& r : rational_roots(N)) {
            while (Zr.eval(r).is_zero() && Zr.degree() > 0)
                Zr = RatPoly::divmod(Zr, RatPoly({-r, Rational(1)})).first;
        }
        if (Zr.degree() >= d) {
            std::vector<Integer> zi = integer_model(Zr);
            std::vector<Rational> zr(zi.size());
            for (size_t i = 0; i < zi.size(); ++i) zr[i] = Rational(zi[i]);
            RatPoly Z{std::move(zr)};
            for (const RatPoly& h : integer_factors_of_degree(Z, d)) {
                KPoly hk = KPoly::from_ratpoly(F, h).shifted(shift);
                KPoly g = KPoly::gcd(f, hk);
                if (g.degree() == 1) {
                    FieldElement root = -(g.monic().coeff(0));
                    if (p.eval(root).is_zero()) roots.push_back(root);
                }
            }
        }
        return sorted_unique(std::move(roots));
    }
    throw std::logic_error("roots_in_field: no squarefree norm found");
}

// ---------------------------------------------------------------------------
// Linear factors of ternary forms.

namespace {

// Univariate polynomial in `var` obtained from the coefficient of a fixed
// monomial in the remaining variables: terms (exponents e) of poly are grouped
// by e with e[var] removed.
KPoly coefficient_poly(const MultiPoly& poly, int var, const std::vector<int>& rest_exps) {
    std::vector<FieldElement> c;
    const FieldPtr& F = poly.field();
    for (const auto& [e, coef] : poly.terms()) {
        bool match = true;
        int ri = 0;
        for (int i = 0; i < poly.nvars() && match; ++i) {
            if (i == var) continue;
            if (e[i] != rest_exps[ri++]) match = false;
        }
        if (!match) continue;
        int k = e[var];
        if ((int)c.size() <= k) c.resize(k + 1, F->zero());
        c[k] = c[k] + coef;
    }
    return KPoly(F, std::move(c));
}

// All exponent patterns of the non-`var` variables that occur in poly.
std::vector<std::vector<int>> rest_patterns(const MultiPoly& poly, int var) {
    std::vector<std::vector<int>> out;
    for (const auto& [e, coef] : poly.terms()) {
        std::vector<int> r;
        for (int i = 0; i < poly.nvars(); ++i)
            if (i != var) r.push_back(e[i]);
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Replace one variable; image must use the same variable slots as poly.
MultiPoly substitute_variable(const MultiPoly& poly, int var, const MultiPoly& image) {
    std::vector<MultiPoly> images;
    for (int i = 0; i < poly.nvars(); ++i) {
        if (i == var)
            images.push_back(image);
        else
            images.push_back(MultiPoly::variable(poly.field(), image.nvars(), i));
    }
    return poly.substitute(images);
}

// Exact division of form by the normalized linear form sum(coeffs[i] * v_i)
// whose first nonzero coefficient (index `lead`) is 1.
MultiPoly divide_by_linear(const MultiPoly& form, const std::vector<FieldElement>& coeffs, int lead) {
    const FieldPtr& F = form.field();
    int n = form.nvars();
    // Substitute v_lead -> v_lead - sum_{i != lead} coeffs[i] v_i, so the
    // divisor becomes the plain variable v_lead.
    MultiPoly image(F, n);
    image = MultiPoly::variable(F, n, lead);
    for (int i = 0; i < n; ++i) {
        if (i == lead) continue;
        image = image - MultiPoly::variable(F, n, i).scaled(coeffs[i]);
    }
    MultiPoly shifted = substitute_variable(form, lead, image);
    MultiPoly quot = shifted.divide_by_variable_power(lead, 1);
    // Undo the substitution: v_lead -> the linear form itself.
    MultiPoly ell(F, n);
    for (int i = 0; i < n; ++i) {
        FieldElement ci = i == lead ? F->one() : coeffs[i];
        if (!ci.is_zero()) ell = ell + MultiPoly::variable(F, n, i).scaled(ci);
    }
    return substitute_variable(quot, lead, ell);
}

// Search one linear factor of a nonzero ternary form; coefficients normalized.
std::optional<std::vector<FieldElement>> find_linear_factor(const MultiPoly& form) {
    const FieldPtr& F = form.field();
    int n = form.total_degree();

    // Pattern v2 alone: every term must carry v2.
    {
        bool divisible = true;
        for (const auto& [e, c] : form.terms())
            if (e[2] == 0) divisible = false;
        if (divisible) return std::vector<FieldElement>{F->zero(), F->zero(), F->one()};
    }

    // Pattern v1 + gamma*v2: substitute v1 -> -g*v2 with symbolic g (variable 3).
    {
        MultiPoly image = -(MultiPoly::variable(F, 4, 2) * MultiPoly::variable(F, 4, 3));
        MultiPoly lifted(F, 4);
        for (const auto& [e, c] : form.terms()) {
            std::vector<int> e4 = {e[0], e[1], e[2], 0};
            MultiPoly term(F, 4);
            term.add_term(e4, c);
            lifted = lifted + term;
        }
        MultiPoly R = substitute_variable(lifted, 1, image);
        // Constraint polynomials in g, grouped by (v0, v2) exponents.
        bool any = false;
        std::vector<FieldElement> candidates;
        for (int j = 0; j <= n && !any; ++j) {
            // coefficient of v0^(n-j) v2^j
            KPoly cj = coefficient_poly(R, 3, {n - j, 0, j});
            if (cj.degree() >= 1) {
                any = true;
                candidates = roots_in_field(cj);
            } else if (!cj.is_zero()) {
                // Nonzero constant constraint: no solution in this pattern.
                candidates.clear();
                any = true;
            }
        }
        for (const FieldElement& g : candidates) {
            MultiPoly image2 = -MultiPoly::variable(F, 3, 2).scaled(g);
            if (substitute_variable(form, 1, image2).is_zero())
                return std::vector<FieldElement>{F->zero(), F->one(), g};
        }
    }

    // Pattern v0 + beta*v1 + gamma*v2: c0(beta) from the v2-free part, then
    // gamma from the first constraint that involves it.
    {
        KPoly c0(F);
        {
            std::vector<FieldElement> cs(n + 1, F->zero());
            for (const auto& [e, c] : form.terms()) {
                if (e[2] != 0) continue;
                // v0^a v1^(n-a) contributes c * (-beta)^a to the v1^n coefficient.
                int a = e[0];
                Rational sgn = a % 2 == 0 ? Rational(1) : Rational(-1);
                cs[a] = cs[a] + c * F->from_rational(sgn);
            }
            c0 = KPoly(F, std::move(cs));
        }
        std::vector<FieldElement> betas;
        if (c0.is_zero()) {
            // Every monomial carries v2: handled by earlier patterns unless the
            // v2-free restriction vanishes; then any beta with full check works.
            // Fall through with beta candidates from the next constraint level.
        } else if (c0.degree() == 0) {
            return std::nullopt; // nonzero constant: no factor involves v0
        } else {
            betas = roots_in_field(c0);
        }
        for (const FieldElement& beta : betas) {
            // Substitute v0 -> -beta*v1 - g*v2 with symbolic g in slot 3.
            MultiPoly lifted(F, 4);
            for (const auto& [e, c] : form.terms()) {
                std::vector<int> e4 = {e[0], e[1], e[2], 0};
                MultiPoly term(F, 4);
                term.add_term(e4, c);
                lifted = lifted + term;
            }
            MultiPoly image = -MultiPoly::variable(F, 4, 1).scaled(beta) -
                              MultiPoly::variable(F, 4, 2) * MultiPoly::variable(F, 4, 3);
            MultiPoly R = substitute_variable(lifted, 0, image);
            bool any = false;
            std::vector<FieldElement> gammas;
            for (int j = 1; j <= n && !any; ++j) {
                KPoly cj = coefficient_poly(R, 3, {0, n - j, j});
                if (cj.degree() >= 1) {
                    any = true;
                    gammas = roots_in_field(cj);
                } else if (!cj.is_zero()) {
                    any = true;
                    gammas.clear();
                }
            }
            if (!any) gammas = {F->zero()};
            for (const FieldElement& g : gammas) {
                MultiPoly image2 = -MultiPoly::variable(F, 3, 1).scaled(beta) -
                                   MultiPoly::variable(F, 3, 2).scaled(g);
                MultiPoly rest = substitute_variable(form, 0, image2);
                if (rest.is_zero()) return std::vector<FieldElement>{F->one(), beta, g};
            }
        }
    }
    return std::nullopt;
}

} // namespace

MultiPoly linear_combination(const std::vector<FieldElement>& coeffs,
                             const std::vector<MultiPoly>& vars) {
    if (coeffs.size() != vars.size()) throw std::invalid_argument("linear_combination: size mismatch");
    MultiPoly acc(vars[0].field(), vars[0].nvars());
    for (size_t i = 0; i < coeffs.size(); ++i) acc = acc + vars[i].scaled(coeffs[i]);
    return acc;
}

LinearFactorization linear_factors(const MultiPoly& ternary_form) {
    if (ternary_form.nvars() != 3)
        throw std::invalid_argument("linear_factors: expects a ternary form");
    if (ternary_form.is_zero() || !ternary_form.is_homogeneous())
        throw std::invalid_argument("linear_factors: expects a nonzero homogeneous form");
    if (ternary_form.total_degree() > 3)
        throw std::invalid_argument("linear_factors: degree must be <= 3");

    MultiPoly residual = ternary_form;
    std::vector<LinearFactor> out;
    while (residual.total_degree() >= 1) {
        auto ell = find_linear_factor(residual);
        if (!ell) break;
        int lead = 0;
        while ((*ell)[lead].is_zero()) ++lead;
        residual = divide_by_linear(residual, *ell, lead);
        bool merged = false;
        for (auto& f : out)
            if (f.coeffs == *ell) {
                f.multiplicity += 1;
                merged = true;
                break;
            }
        if (!merged) out.push_back({*ell, 1});
    }
    std::sort(out.begin(), out.end(), [](const LinearFactor& a, const LinearFactor& b) {
        for (size_t i = 0; i < a.coeffs.size(); ++i) {
            if (field_elem_less(a.coeffs[i], b.coeffs[i])) return true;
            if (field_elem_less(b.coeffs[i], a.coeffs[i])) return false;
        }
        return false;
    });
    return {std::move(out), std::move(residual)};
}

LinearFactorization linear_factors(const HomogeneousForm& form) {
    return linear_factors(form.poly());
}

bool has_linear_factor_quaternary(const MultiPoly& form) {
    if (form.nvars() != 4) throw std::invalid_argument("expects a form in four variables");
    if (form.is_zero() || !form.is_homogeneous())
        throw std::invalid_argument("expects a nonzero homogeneous form");
    const FieldPtr& F = form.field();

    const MultiPoly& g = form;
    // A plain variable factor is already a linear factor.
    for (int i = 0; i < 4; ++i) {
        bool divisible = true;
        for (const auto& [e, c] : g.terms())
            if (e[i] == 0) {
                divisible = false;
                break;
            }
        if (divisible) return true;
    }

    // Any remaining linear factor restricts to a nonzero linear factor of the
    // ternary form g|_{v3=0}; recover the v3 coefficient per candidate.
    MultiPoly restricted(F, 3);
    for (const auto& [e, c] : g.terms()) {
        if (e[3] != 0) continue;
        MultiPoly term(F, 3);
        term.add_term({e[0], e[1], e[2]}, c);
        restricted = restricted + term;
    }
    if (restricted.is_zero()) return false; // v3 | g was handled above
    int n = g.total_degree();
    for (const auto& cand : linear_factors(restricted).factors) {
        // ell = a v0 + b v1 + c v2 + delta v3, delta unknown (slot 4 symbolic).
        int lead = 0;
        while (cand.coeffs[lead].is_zero()) ++lead;
        MultiPoly lifted(F, 5);
        for (const auto& [e, c] : g.terms()) {
            MultiPoly term(F, 5);
            term.add_term({e[0], e[1], e[2], e[3], 0}, c);
            lifted = lifted + term;
        }
        // v_lead -> -(sum_{i>lead, i<3} cand_i v_i) - delta v3
        MultiPoly image(F, 5);
        for (int i = 0; i < 3; ++i) {
            if (i == lead) continue;
            image = image - MultiPoly::variable(F, 5, i).scaled(cand.coeffs[i]);
        }
        image = image - MultiPoly::variable(F, 5, 3) * MultiPoly::variable(F, 5, 4);
        MultiPoly R = substitute_variable(lifted, lead, image);
        // Find the first constraint polynomial in delta and test its roots.
        bool decided = false;
        std::vector<FieldElement> deltas;
        for (const auto& pat : rest_patterns(R, 4)) {
            KPoly cj = coefficient_poly(R, 4, pat);
            if (cj.degree() >= 1) {
                deltas = roots_in_field(cj);
                decided = true;
                break;
            }
            if (!cj.is_zero()) {
                decided = true;
                deltas.clear();
                break;
            }
        }
        if (!decided) deltas = {F->zero()};
        for (const FieldElement& delta : deltas) {
            MultiPoly image2(F, 4);
            for (int i = 0; i < 3; ++i) {
                if (i == lead) continue;
                image2 = image2 - MultiPoly::variable(F, 4, i).scaled(cand.coeffs[i]);
            }
            image2 = image2 - MultiPoly::variable(F, 4, 3).scaled(delta);
            if (substitute_variable(g, lead, image2).is_zero()) return true;
        }
    }
    return false;
}

} // namespace delpezzo
