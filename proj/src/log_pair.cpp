#include "delpezzo/log_pair.hpp"

#include <algorithm>
#include <stdexcept>

namespace delpezzo {

SymbolicCurve::SymbolicCurve(std::string label, DivisorClass cls)
    : label_(std::move(label)), cls_(std::move(cls)) {
    if (label_.empty()) throw std::invalid_argument("SymbolicCurve: empty label");
}

void SymbolicCurve::declare_multiplicity(const std::string& point, long m) {
    if (m < 0) throw std::invalid_argument("SymbolicCurve: negative multiplicity");
    mult_[point] = m;
}

void SymbolicCurve::declare_intersection(const std::string& other_curve, const std::string& point,
                                         long m) {
    if (m < 0) throw std::invalid_argument("SymbolicCurve: negative intersection multiplicity");
    inter_[{other_curve, point}] = m;
}

void SymbolicCurve::declare_smooth(const std::string& point) { smooth_.insert(point); }

std::optional<long> SymbolicCurve::multiplicity_at(const std::string& point) const {
    auto it = mult_.find(point);
    if (it == mult_.end()) return std::nullopt;
    return it->second;
}

std::optional<long> SymbolicCurve::intersection_at(const std::string& other_curve,
                                                   const std::string& point) const {
    auto it = inter_.find({other_curve, point});
    if (it == inter_.end()) return std::nullopt;
    return it->second;
}

QDivisor::QDivisor(std::vector<QTerm> terms, size_t lattice_rank)
    : terms_(std::move(terms)), rank_(lattice_rank) {
    if (rank_ < 1) throw std::invalid_argument("QDivisor: lattice rank must be positive");
    for (const auto& t : terms_) {
        if (t.coeff.sign() < 0) throw std::invalid_argument("QDivisor: negative coefficient");
        if (t.curve.cls().rank() != rank_)
            throw std::invalid_argument("QDivisor: class rank mismatch for " + t.curve.label());
    }
    for (size_t i = 0; i < terms_.size(); ++i)
        for (size_t j = i + 1; j < terms_.size(); ++j)
            if (terms_[i].curve.label() == terms_[j].curve.label())
                throw std::invalid_argument("QDivisor: duplicate curve " + terms_[i].curve.label());

    // Declared local intersection data must agree from both sides and must
    // not exceed the pairing of the classes.
    for (size_t i = 0; i < terms_.size(); ++i) {
        for (size_t j = i + 1; j < terms_.size(); ++j) {
            const SymbolicCurve& a = terms_[i].curve;
            const SymbolicCurve& b = terms_[j].curve;
            std::set<std::string> points;
            for (const auto& [key, m] : a.intersections())
                if (key.first == b.label()) points.insert(key.second);
            for (const auto& [key, m] : b.intersections())
                if (key.first == a.label()) points.insert(key.second);
            long declared_sum = 0;
            for (const std::string& p : points) {
                auto ma = a.intersection_at(b.label(), p);
                auto mb = b.intersection_at(a.label(), p);
                if (ma && mb && *ma != *mb)
                    throw std::invalid_argument("QDivisor: curves " + a.label() + " and " +
                                                b.label() + " disagree on intersection at " + p);
                declared_sum += ma ? *ma : *mb;
            }
            Rational global = intersect(a.cls(), b.cls());
            if (Rational(Integer(declared_sum)) > global)
                throw std::invalid_argument("QDivisor: declared local intersections of " +
                                            a.label() + " and " + b.label() +
                                            " exceed the class pairing " + global.str());
        }
    }
}

DivisorClass QDivisor::cls() const {
    std::vector<Rational> zero(rank_, Rational(0));
    DivisorClass acc{zero};
    for (const auto& t : terms_) acc = acc + t.curve.cls().scaled(t.coeff);
    return acc;
}

Rational QDivisor::mult_at(const std::string& point) const {
    Rational acc(0);
    for (const auto& t : terms_) {
        auto m = t.curve.multiplicity_at(point);
        if (!m)
            throw std::invalid_argument("QDivisor: " + t.curve.label() +
                                        " has no declared multiplicity at " + point);
        acc += t.coeff * Rational(Integer(*m));
    }
    return acc;
}

const QTerm* QDivisor::find(const std::string& label) const {
    for (const auto& t : terms_)
        if (t.curve.label() == label) return &t;
    return nullptr;
}

long QDivisor::intersection_at(size_t i, size_t j, const std::string& point) const {
    if (i >= terms_.size() || j >= terms_.size() || i == j)
        throw std::invalid_argument("QDivisor::intersection_at: bad indices");
    auto a = terms_[i].curve.intersection_at(terms_[j].curve.label(), point);
    if (a) return *a;
    auto b = terms_[j].curve.intersection_at(terms_[i].curve.label(), point);
    if (b) return *b;
    throw std::invalid_argument("QDivisor: no declared intersection of " +
                                terms_[i].curve.label() + " and " + terms_[j].curve.label() +
                                " at " + point);
}

DegreeCheck anticanonical_degree_check(const QDivisor& d) {
    DivisorClass mk = anticanonical_class(d.num_exceptional());
    Rational value = intersect(mk, d.cls());
    long expected = anticanonical_degree(d.num_exceptional());
    return DegreeCheck{value == Rational(Integer(expected)), value, expected};
}

PairRefutation multiplicity_refute(const QDivisor& d, const std::string& point,
                                   bool claim_not_lc) {
    Rational m = d.mult_at(point);
    if (!claim_not_lc)
        return {PairVerdict::consistent, "multiplicity", m, "no claim made at " + point};
    if (m <= Rational(1))
        return {PairVerdict::refuted, "multiplicity", m,
                "mult_" + point + "(D) = " + m.str() +
                    " <= 1, but a not-log-canonical point has multiplicity > 1"};
    return {PairVerdict::consistent, "multiplicity", m,
            "mult_" + point + "(D) = " + m.str() + " > 1 gives no refutation"};
}

ConvexityResult convexity_transform(const QDivisor& d, const QDivisor& t) {
    if (d.lattice_rank() != t.lattice_rank())
        throw std::invalid_argument("convexity_transform: lattice rank mismatch");
    if (!(d.cls() == t.cls()))
        throw std::invalid_argument("convexity_transform: classes of D and T differ");

    // b_i aligned with D's components; Supp(T) must sit inside Supp(D).
    std::vector<Rational> a, b;
    for (const auto& term : d.terms()) {
        a.push_back(term.coeff);
        const QTerm* other = t.find(term.curve.label());
        b.push_back(other ? other->coeff : Rational(0));
    }
    for (const auto& term : t.terms())
        if (term.coeff.sign() > 0 && !d.find(term.curve.label()))
            throw std::invalid_argument("convexity_transform: component " + term.curve.label() +
                                        " of T is missing from D");
    if (a == b) throw std::invalid_argument("convexity_transform: T equals D");

    std::optional<size_t> argmax;
    Rational c(0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) {
            if (b[i].sign() > 0)
                throw std::invalid_argument("convexity_transform: component " +
                                            d.terms()[i].curve.label() +
                                            " of T is missing from D");
            continue;
        }
        Rational ratio = b[i] / a[i];
        if (!argmax || ratio > c) {
            argmax = i;
            c = ratio;
        }
    }
    if (!argmax || c <= Rational(1))
        throw std::invalid_argument("convexity_transform: max b_i/a_i = " + c.str() +
                                    " is not > 1; the transform does not apply");

    size_t k = *argmax;
    Rational mu = Rational(1) / (c - Rational(1));
    std::vector<QTerm> out = d.terms();
    for (size_t i = 0; i < a.size(); ++i) {
        Rational closed = (b[k] * a[i] - a[k] * b[i]) / (b[k] - a[k]);
        Rational direct = (Rational(1) + mu) * a[i] - mu * b[i];
        if (closed != direct)
            throw std::logic_error("convexity_transform: closed form disagrees with (1+mu)D - muT");
        if (closed.sign() < 0)
            throw std::logic_error("convexity_transform: negative output coefficient");
        out[i].coeff = closed;
    }
    if (!out[k].coeff.is_zero())
        throw std::logic_error("convexity_transform: dropped component kept a nonzero coefficient");

    QDivisor d_mu(std::move(out), d.lattice_rank());
    if (!(d_mu.cls() == d.cls()))
        throw std::logic_error("convexity_transform: class changed");
    return ConvexityResult{c, mu, std::move(d_mu), d.terms()[k].curve.label()};
}

PairRefutation adjunction_refute(const QDivisor& d, size_t j, const std::string& point) {
    if (j >= d.terms().size()) throw std::invalid_argument("adjunction_refute: bad index");
    const QTerm& tj = d.terms()[j];
    if (tj.coeff > Rational(1))
        throw std::invalid_argument("adjunction_refute: coefficient of " + tj.curve.label() +
                                    " is " + tj.coeff.str() + " > 1; the inequality needs <= 1");
    if (!tj.curve.declared_smooth(point))
        throw std::invalid_argument("adjunction_refute: " + tj.curve.label() +
                                    " is not declared smooth at " + point);
    Rational sum(0);
    for (size_t i = 0; i < d.terms().size(); ++i) {
        if (i == j) continue;
        long ip = d.intersection_at(j, i, point);
        sum += d.terms()[i].coeff * Rational(Integer(ip));
    }
    if (sum <= Rational(1))
        return {PairVerdict::refuted, "adjunction", sum,
                "sum over other components of coeff * I_" + point + " with " + tj.curve.label() +
                    " is " + sum.str() + " <= 1, but not-lc at " + point + " forces > 1"};
    return {PairVerdict::consistent, "adjunction", sum,
            "sum " + sum.str() + " > 1 gives no refutation"};
}

PulledBackPair blowup_pullback(const QDivisor& d, const std::string& point) {
    Rational mult = d.mult_at(point);
    Rational exc_coeff = mult - Rational(1);
    if (exc_coeff.sign() < 0)
        throw std::invalid_argument("blowup_pullback: mult_" + point + "(D) = " + mult.str() +
                                    " < 1 would give a negative exceptional coefficient");

    size_t new_rank = d.lattice_rank() + 1;
    std::string exc_label = "E@" + point;
    if (d.find(exc_label))
        throw std::invalid_argument("blowup_pullback: label " + exc_label + " already in use");

    PulledBackPair out{QDivisor({}, new_rank), exc_coeff, exc_label, point, {}, {}, {}, {}};
    std::vector<QTerm> terms;
    for (const auto& term : d.terms()) {
        long m = *term.curve.multiplicity_at(point); // declared: mult_at succeeded
        std::vector<Rational> coords = term.curve.cls().coords();
        coords.emplace_back(Integer(-m));
        SymbolicCurve strict(term.curve.label(), DivisorClass(coords));
        out.center_mults[term.curve.label()] = m;
        for (const auto& [key, val] : term.curve.intersections()) {
            if (key.second == point)
                out.center_intersections[{term.curve.label(), key.first}] = val;
            else
                strict.declare_intersection(key.first, key.second, val);
        }
        for (const auto& [pt, val] : term.curve.multiplicities())
            if (pt != point) strict.declare_multiplicity(pt, val);
        for (const auto& pt : term.curve.smooth_points()) {
            if (pt == point)
                out.center_smooth.insert(term.curve.label());
            else
                strict.declare_smooth(pt);
        }
        terms.push_back(QTerm{term.coeff, std::move(strict)});
    }
    std::vector<Rational> exc_coords(new_rank, Rational(0));
    exc_coords.back() = Rational(1);
    terms.push_back(QTerm{exc_coeff, SymbolicCurve(exc_label, DivisorClass(exc_coords))});

    out.transformed = QDivisor(std::move(terms), new_rank);
    out.ledger.push_back("any not-lc point Q of the transformed pair on " + exc_label +
                         " satisfies mult_" + point + "(D) + mult_Q > 2 (here mult_" + point +
                         "(D) = " + mult.str() + ")");
    if (mult <= Rational(2))
        out.ledger.push_back("mult_" + point + "(D) = " + mult.str() +
                             " <= 2: at most one not-lc point on " + exc_label);
    return out;
}

QDivisor contract_back(const PulledBackPair& p) {
    size_t old_rank = p.transformed.lattice_rank() - 1;
    std::vector<QTerm> terms;
    for (const auto& term : p.transformed.terms()) {
        if (term.curve.label() == p.exc_label) continue;
        std::vector<Rational> coords = term.curve.cls().coords();
        auto mit = p.center_mults.find(term.curve.label());
        if (mit == p.center_mults.end())
            throw std::invalid_argument("contract_back: no center multiplicity for " +
                                        term.curve.label());
        if (coords.back() != Rational(Integer(-mit->second)))
            throw std::invalid_argument("contract_back: class of " + term.curve.label() +
                                        " does not match the recorded center multiplicity");
        coords.pop_back();
        SymbolicCurve orig(term.curve.label(), DivisorClass(coords));
        for (const auto& [pt, val] : term.curve.multiplicities())
            orig.declare_multiplicity(pt, val);
        orig.declare_multiplicity(p.center, mit->second);
        for (const auto& [key, val] : term.curve.intersections())
            orig.declare_intersection(key.first, key.second, val);
        for (const auto& [key, val] : p.center_intersections)
            if (key.first == term.curve.label())
                orig.declare_intersection(key.second, p.center, val);
        for (const auto& pt : term.curve.smooth_points()) orig.declare_smooth(pt);
        if (p.center_smooth.count(term.curve.label())) orig.declare_smooth(p.center);
        terms.push_back(QTerm{term.coeff, std::move(orig)});
    }
    return QDivisor(std::move(terms), old_rank);
}

std::vector<std::string> not_lc_along_curves(const QDivisor& d) {
    std::vector<std::string> out;
    for (const auto& t : d.terms())
        if (t.coeff > Rational(1)) out.push_back(t.curve.label());
    return out;
}

} // namespace delpezzo
