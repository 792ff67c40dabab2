#include "delpezzo/germ.hpp"

#include "delpezzo/factor.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace delpezzo {

PlaneCurveGerm::PlaneCurveGerm(MultiPoly f) : f_(std::move(f)) {
    if (f_.nvars() != 2) throw std::invalid_argument("PlaneCurveGerm: need two variables");
    if (f_.is_zero()) throw std::invalid_argument("PlaneCurveGerm: zero polynomial");
    if (f_.order() < 1) throw std::invalid_argument("PlaneCurveGerm: must vanish at the origin");
}

PlaneCurveGerm PlaneCurveGerm::linear_change(const Rational& a, const Rational& b,
                                             const Rational& c, const Rational& d) const {
    if ((a * d - b * c).is_zero())
        throw std::invalid_argument("PlaneCurveGerm::linear_change: singular matrix");
    const FieldPtr& K = f_.field();
    MultiPoly u = MultiPoly::variable(K, 2, 0);
    MultiPoly v = MultiPoly::variable(K, 2, 1);
    return PlaneCurveGerm(f_.substitute({u.scaled(a) + v.scaled(b), u.scaled(c) + v.scaled(d)}));
}

std::string germ_type_name(GermType t) {
    switch (t) {
        case GermType::smooth: return "smooth";
        case GermType::node: return "node";
        case GermType::cusp: return "cusp";
        case GermType::tacnode: return "tacnode";
        case GermType::ordinary_triple: return "ordinary-triple";
        case GermType::other: return "other";
    }
    throw std::logic_error("germ_type_name: bad enum");
}

namespace {

// f(0, v) as a univariate polynomial in v. Nonzero whenever u does not
// divide f.
KPoly v_slice(const MultiPoly& f) {
    const FieldPtr& K = f.field();
    std::vector<FieldElement> c;
    for (const auto& [e, coef] : f.terms()) {
        if (e[0] != 0) continue;
        if (static_cast<size_t>(e[1]) >= c.size()) c.resize(e[1] + 1, K->zero());
        c[e[1]] = coef;
    }
    return KPoly(K, std::move(c));
}

KPoly u_slice(const MultiPoly& f) {
    const FieldPtr& K = f.field();
    std::vector<FieldElement> c;
    for (const auto& [e, coef] : f.terms()) {
        if (e[1] != 0) continue;
        if (static_cast<size_t>(e[0]) >= c.size()) c.resize(e[0] + 1, K->zero());
        c[e[0]] = coef;
    }
    return KPoly(K, std::move(c));
}

int order_at_zero(const KPoly& p) {
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero()) return i;
    throw std::logic_error("order_at_zero: zero polynomial");
}

// Exceptional divisor running along a coordinate axis at the current point.
struct ExcData {
    long long M; // multiplicity of the total transform along it
    long long k; // discrepancy
};

struct Resolver {
    std::vector<BlowupRecord> records;

    // f vanishes at the origin; axis_u / axis_v are the exceptional divisors
    // {u = 0} / {v = 0} through the point, when present. Invariant: neither
    // axis divides f.
    void resolve(const MultiPoly& f, std::optional<ExcData> axis_u,
                 std::optional<ExcData> axis_v) {
        const FieldPtr& K = f.field();
        int m = f.order();
        int nexc = (axis_u ? 1 : 0) + (axis_v ? 1 : 0);
        if (m == 1 && nexc == 0) return;
        if (m == 1 && nexc == 1) {
            int contact = axis_u ? order_at_zero(v_slice(f)) : order_at_zero(u_slice(f));
            if (contact == 1) return; // smooth and transverse to the one divisor
        }
        if (records.size() >= 32)
            throw std::runtime_error(
                "germ resolution: more than 32 blow-ups; the germ is likely non-reduced");

        long long M = m + (axis_u ? axis_u->M : 0) + (axis_v ? axis_v->M : 0);
        long long k = 1 + (axis_u ? axis_u->k : 0) + (axis_v ? axis_v->k : 0);
        records.push_back({m, M, k});
        ExcData fresh{M, k};

        MultiPoly u = MultiPoly::variable(K, 2, 0);
        MultiPoly v = MultiPoly::variable(K, 2, 1);

        // Chart (u, uv): the new exceptional divisor is {u = 0}; the old
        // {v = 0} divisor survives as {v = 0}, meeting it at v = 0 only.
        MultiPoly f1 = f.substitute({u, u * v}).divide_by_variable_power(0, m);
        KPoly g = v_slice(f1);
        KPoly residual = g;
        for (const FieldElement& lam : roots_in_field(g)) {
            KPoly lin(K, {-lam, K->one()});
            while (true) {
                auto [q, rem] = KPoly::divmod(residual, lin);
                if (!rem.is_zero()) break;
                residual = q;
            }
            MultiPoly recentred = f1.substitute({u, v + MultiPoly::constant(K, 2, lam)});
            std::optional<ExcData> old_v;
            if (lam.is_zero() && axis_v) old_v = axis_v;
            resolve(recentred, fresh, old_v);
        }
        if (residual.degree() >= 1) {
            // Roots outside the field. A simple root is a transverse smooth
            // point of the strict transform on the new divisor alone, and
            // needs no blow-up; a repeated one would force a center we cannot
            // write down over this field.
            if (KPoly::gcd(residual, residual.derivative()).degree() >= 1)
                throw std::runtime_error(
                    "germ resolution: repeated tangent direction outside the coefficient "
                    "field; extend the field to resolve this germ");
        }

        // Chart (uv, v): only the origin is new here, reached when the strict
        // transform approaches along the v-axis. The old {u = 0} divisor
        // survives as {u = 0}.
        MultiPoly f2 = f.substitute({u * v, v}).divide_by_variable_power(1, m);
        if (f2.coeff(std::vector<int>{0, 0}).is_zero()) resolve(f2, axis_u, fresh);
    }
};

// Dehomogenization q(1, t) of a binary form; the power of u drops out.
KPoly dehomogenize_binary(const MultiPoly& q) {
    const FieldPtr& K = q.field();
    std::vector<FieldElement> c;
    for (const auto& [e, coef] : q.terms()) {
        if (static_cast<size_t>(e[1]) >= c.size()) c.resize(e[1] + 1, K->zero());
        c[e[1]] = coef;
    }
    return KPoly(K, std::move(c));
}

// Squarefree as a binary form over the algebraic closure.
bool binary_form_squarefree(const MultiPoly& q, int degree) {
    KPoly p = dehomogenize_binary(q);
    if (degree - p.degree() > 1) return false; // u^2 divides q
    if (p.degree() < 1) return true;
    return KPoly::gcd(p, p.derivative()).degree() == 0;
}

std::vector<int> mult_sequence(const LctCertificate& cert) {
    std::vector<int> seq;
    seq.reserve(cert.blowups.size());
    for (const auto& r : cert.blowups) seq.push_back(r.strict_mult);
    return seq;
}

} // namespace

LctCertificate lct_via_blowups(const PlaneCurveGerm& germ) {
    Resolver res;
    res.resolve(germ.poly(), std::nullopt, std::nullopt);
    Rational lct(1);
    for (const auto& r : res.records) {
        Rational cand(Integer(r.discrepancy + 1), Integer(r.total_mult));
        lct = min(lct, cand);
    }
    return LctCertificate{lct, std::move(res.records)};
}

GermClassification classify_germ(const PlaneCurveGerm& germ) {
    GermClassification out;
    int m = germ.multiplicity();
    if (m == 1) {
        out.type = GermType::smooth;
        return out;
    }
    MultiPoly lowest = germ.poly().homogeneous_part(m);
    bool squarefree = binary_form_squarefree(lowest, m);
    if (m == 2) {
        if (squarefree) {
            out.type = GermType::node;
            out.multiplicity_sequence = {2};
            KPoly p = dehomogenize_binary(lowest);
            out.branches_conjugate = (p.degree() == 2 && roots_in_field(p).empty());
            return out;
        }
        // One double tangent direction: the shape is decided further up the
        // resolution. Tacnode separates after two blow-ups, cusp needs the
        // corner blow-up as well.
        out.multiplicity_sequence = mult_sequence(lct_via_blowups(germ));
        if (out.multiplicity_sequence == std::vector<int>{2, 2})
            out.type = GermType::tacnode;
        else if (out.multiplicity_sequence == std::vector<int>{2, 1, 1})
            out.type = GermType::cusp;
        else
            out.type = GermType::other;
        return out;
    }
    if (m == 3 && squarefree) {
        out.type = GermType::ordinary_triple;
        out.multiplicity_sequence = {3};
        return out;
    }
    out.type = GermType::other;
    out.multiplicity_sequence = mult_sequence(lct_via_blowups(germ));
    return out;
}

Rational lct_table(GermType type) {
    switch (type) {
        case GermType::smooth: return Rational(1);
        case GermType::node: return Rational(1);
        case GermType::cusp: return Rational(Integer(5), Integer(6));
        case GermType::tacnode: return Rational(Integer(3), Integer(4));
        case GermType::ordinary_triple: return Rational(Integer(2), Integer(3));
        case GermType::other:
            throw std::invalid_argument("lct_table: no single value for type 'other'");
    }
    throw std::logic_error("lct_table: bad enum");
}

Rational weighted_lct(const PlaneCurveGerm& germ, const Rational& coeff) {
    if (coeff.sign() <= 0) throw std::invalid_argument("weighted_lct: coefficient must be positive");
    return lct_via_blowups(germ).lct / coeff;
}

} // namespace delpezzo
