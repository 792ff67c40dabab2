#include "delpezzo/multipoly.hpp"

#include <numeric>
#include <stdexcept>

namespace delpezzo {

MultiPoly::MultiPoly(FieldPtr field, int nvars) : field_(std::move(field)), nvars_(nvars) {
    if (!field_) throw std::invalid_argument("multipoly: null field");
    if (nvars_ < 1) throw std::invalid_argument("multipoly: needs at least one variable");
}

MultiPoly MultiPoly::constant(const FieldPtr& field, int nvars, const FieldElement& c) {
    MultiPoly p(field, nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::constant(const FieldPtr& field, int nvars, const Rational& c) {
    return constant(field, nvars, field->from_rational(c));
}

MultiPoly MultiPoly::variable(const FieldPtr& field, int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("multipoly: variable index out of range");
    MultiPoly p(field, nvars);
    std::vector<int> e(nvars, 0);
    e[index] = 1;
    p.add_term(e, field->one());
    return p;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

int MultiPoly::order() const {
    if (terms_.empty()) return -1;
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = std::accumulate(e.begin(), e.end(), 0);
        if (d < 0 || s < d) d = s;
    }
    return d;
}

bool MultiPoly::is_homogeneous() const {
    return terms_.empty() || order() == total_degree();
}

FieldElement MultiPoly::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? field_->zero() : it->second;
}

MultiPoly MultiPoly::homogeneous_part(int degree) const {
    MultiPoly out(field_, nvars_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == degree) out.terms_.emplace(e, c);
    return out;
}

void MultiPoly::add_term(const std::vector<int>& exps, const FieldElement& c) {
    if ((int)exps.size() != nvars_) throw std::invalid_argument("multipoly: exponent arity mismatch");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("multipoly: negative exponent");
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("multipoly: arity mismatch");
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("multipoly: arity mismatch");
    MultiPoly r(a.field_, a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(a.nvars_);
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const FieldElement& s) const {
    MultiPoly r(field_, nvars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& s) const { return scaled(field_->from_rational(s)); }

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [e, c] : terms_) {
        if (it->first != e || !(it->second == c)) return false;
        ++it;
    }
    return true;
}

FieldElement MultiPoly::evaluate(const std::vector<FieldElement>& point) const {
    if ((int)point.size() != nvars_) throw std::invalid_argument("multipoly: point arity mismatch");
    FieldElement acc = field_->zero();
    for (const auto& [e, c] : terms_) {
        FieldElement term = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) term = term * point[i].pow(e[i]);
        acc = acc + term;
    }
    return acc;
}

MultiPoly MultiPoly::partial(int index) const {
    if (index < 0 || index >= nvars_) throw std::invalid_argument("multipoly: variable index out of range");
    MultiPoly r(field_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[index] == 0) continue;
        std::vector<int> ne = e;
        ne[index] -= 1;
        r.add_term(ne, c * field_->from_rational(Rational((long)e[index])));
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if ((int)images.size() != nvars_) throw std::invalid_argument("multipoly: substitution arity mismatch");
    int out_nvars = images.empty() ? nvars_ : images[0].nvars();
    MultiPoly acc(field_, out_nvars);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(field_, out_nvars, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) term = term * images[i].pow(e[i]);
        acc = acc + term;
    }
    return acc;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly acc = MultiPoly::constant(field_, nvars_, field_->one());
    MultiPoly base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

MultiPoly MultiPoly::divide_by_variable_power(int index, int k) const {
    MultiPoly r(field_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[index] < k) throw std::domain_error("multipoly: not divisible by variable power");
        std::vector<int> ne = e;
        ne[index] -= k;
        r.terms_.emplace(ne, c);
    }
    return r;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if ((int)names.size() != nvars_) throw std::invalid_argument("multipoly: name count mismatch");
    if (terms_.empty()) return "0";
    std::string out;
    // Reverse map order: lexicographically largest exponent vector first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string coeff;
        bool negative = false;
        if (c.is_rational()) {
            Rational r = c.rational_value();
            if (r.sign() < 0) {
                negative = true;
                r = -r;
            }
            if (!r.is_one() || mono.empty()) coeff = r.str();
        } else {
            coeff = "(" + c.str() + ")";
        }
        std::string term = coeff;
        if (!mono.empty()) {
            if (!term.empty()) term += "*";
            term += mono;
        }
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out;
}

HomogeneousForm::HomogeneousForm(MultiPoly p, std::vector<std::string> variables)
    : p_(std::move(p)), vars_(std::move(variables)) {
    if ((int)vars_.size() != p_.nvars())
        throw std::invalid_argument("form: variable name count mismatch");
    if (p_.is_zero()) throw std::invalid_argument("form: zero polynomial");
    if (!p_.is_homogeneous()) throw std::invalid_argument("form: polynomial is not homogeneous");
}

} // namespace delpezzo
