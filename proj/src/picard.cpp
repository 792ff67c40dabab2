#include "delpezzo/picard.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace delpezzo {

DivisorClass::DivisorClass(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("DivisorClass: empty coordinate vector");
}

DivisorClass DivisorClass::integral(const std::vector<long>& coords) {
    std::vector<Rational> c;
    c.reserve(coords.size());
    for (long v : coords) c.emplace_back(Integer(v));
    return DivisorClass(std::move(c));
}

const Rational& DivisorClass::e(size_t i) const {
    if (i < 1 || i >= coords_.size()) throw std::out_of_range("DivisorClass::e: index");
    return coords_[i];
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    if (coords_.size() != o.coords_.size())
        throw std::invalid_argument("DivisorClass: rank mismatch");
    std::vector<Rational> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + o.coords_[i];
    return DivisorClass(std::move(c));
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    if (coords_.size() != o.coords_.size())
        throw std::invalid_argument("DivisorClass: rank mismatch");
    std::vector<Rational> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] - o.coords_[i];
    return DivisorClass(std::move(c));
}

DivisorClass DivisorClass::scaled(const Rational& s) const {
    std::vector<Rational> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] * s;
    return DivisorClass(std::move(c));
}

std::string DivisorClass::str() const {
    std::string out = "(" + coords_[0].str();
    if (coords_.size() > 1) out += ";";
    for (size_t i = 1; i < coords_.size(); ++i) {
        out += " " + coords_[i].str();
        if (i + 1 < coords_.size()) out += ",";
    }
    out += ")";
    return out;
}

Rational intersect(const DivisorClass& a, const DivisorClass& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("intersect: rank mismatch");
    Rational acc = a.coords()[0] * b.coords()[0];
    for (size_t i = 1; i < a.rank(); ++i) acc -= a.coords()[i] * b.coords()[i];
    return acc;
}

DivisorClass anticanonical_class(size_t num_exceptional) {
    std::vector<Rational> c(num_exceptional + 1, Rational(-1));
    c[0] = Rational(3);
    return DivisorClass(std::move(c));
}

long anticanonical_degree(size_t num_exceptional) {
    return 9 - static_cast<long>(num_exceptional);
}

namespace {

// Enumerate integer vectors (c_1, ..., c_r) with sum c_i = s and
// sum c_i^2 = q, each c_i in [lo, hi], appending full solutions via sink.
void enumerate_coords(size_t r, long s, long q, long lo, long hi, std::vector<long>& partial,
                      const std::function<void(const std::vector<long>&)>& sink) {
    if (partial.size() == r) {
        if (s == 0 && q == 0) sink(partial);
        return;
    }
    size_t remaining = r - partial.size();
    for (long c = lo; c <= hi; ++c) {
        long s2 = s - c;
        long q2 = q - c * c;
        if (q2 < 0) continue;
        // Cauchy-Schwarz: remaining-1 more entries must satisfy sum = s2, sum sq = q2.
        size_t rem = remaining - 1;
        if (rem == 0) {
            if (s2 == 0 && q2 == 0) {
                partial.push_back(c);
                sink(partial);
                partial.pop_back();
            }
            continue;
        }
        if (static_cast<long long>(s2) * s2 > static_cast<long long>(q2) * static_cast<long long>(rem))
            continue;
        partial.push_back(c);
        enumerate_coords(r, s2, q2, lo, hi, partial, sink);
        partial.pop_back();
    }
}

} // namespace

std::vector<DivisorClass> minus_one_classes(size_t num_exceptional) {
    if (num_exceptional > 8)
        throw std::invalid_argument("minus_one_classes: at most 8 exceptional classes");
    size_t r = num_exceptional;
    std::vector<DivisorClass> out;
    // Coordinates store plain coefficients: (h, a_1, ..., a_r) = hH + sum a_i E_i.
    // The constraints C.(-K) = 1, C^2 = -1 become sum a_i = 1 - 3h and
    // sum a_i^2 = h^2 + 1.  Every solution has h in 0..6 and a_i in [-3, 1].
    for (long h = 0; h <= 6; ++h) {
        long s = 1 - 3 * h;       // required sum of a_i
        long q = h * h + 1;       // required sum of a_i^2
        if (q < 0) continue;
        std::vector<long> partial;
        enumerate_coords(r, s, q, -3, 1, partial,
                         [&](const std::vector<long>& a) {
                             std::vector<long> full;
                             full.push_back(h);
                             full.insert(full.end(), a.begin(), a.end());
                             out.push_back(DivisorClass::integral(full));
                         });
    }
    std::sort(out.begin(), out.end(), [](const DivisorClass& x, const DivisorClass& y) {
        return std::lexicographical_compare(x.coords().begin(), x.coords().end(),
                                            y.coords().begin(), y.coords().end());
    });
    return out;
}

std::vector<std::pair<DivisorClass, DivisorClass>> zero_curve_pairs(size_t num_exceptional) {
    size_t r = num_exceptional;
    std::vector<std::pair<DivisorClass, DivisorClass>> out;
    if (r != 5) return out; // only the degree-4 case carries the conic-bundle pairs
    DivisorClass mk = anticanonical_class(r);
    for (size_t i = 1; i <= r; ++i) {
        // F = H - E_i, F' = 2H - sum_{j != i} E_j; F + F' = -K.
        std::vector<long> f(r + 1, 0), g(r + 1, 0);
        f[0] = 1;
        f[i] = -1;
        g[0] = 2;
        for (size_t j = 1; j <= r; ++j)
            if (j != i) g[j] = -1;
        DivisorClass F = DivisorClass::integral(f);
        DivisorClass G = DivisorClass::integral(g);
        if (!(F + G == mk)) throw std::logic_error("zero_curve_pairs: pair does not sum to -K");
        out.emplace_back(F, G);
    }
    return out;
}

size_t picard_rank_lower_bound(long degree) {
    if (degree < 1 || degree > 9)
        throw std::invalid_argument("picard_rank_lower_bound: degree must be 1..9");
    return static_cast<size_t>(10 - degree);
}

} // namespace delpezzo
