// Numerical class group of a blow-up of P^2 at r points, in the basis
// (H, E_1, ..., E_r).  The intersection form is diag(1, -1, ..., -1).
#pragma once

#include "delpezzo/rational.hpp"

#include <string>
#include <vector>

namespace delpezzo {

class DivisorClass {
public:
    DivisorClass() = default;
    // coords = (h, c_1, ..., c_r); rational entries so Q-divisor classes fit.
    explicit DivisorClass(std::vector<Rational> coords);
    static DivisorClass integral(const std::vector<long>& coords);

    size_t rank() const { return coords_.size(); } // 1 + r
    size_t num_exceptional() const { return coords_.size() - 1; }
    const Rational& h() const { return coords_[0]; }
    const Rational& e(size_t i) const; // 1-based exceptional coordinate
    const std::vector<Rational>& coords() const { return coords_; }

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass scaled(const Rational& s) const;
    bool operator==(const DivisorClass& o) const = default;

    std::string str() const; // "(h; c1, ..., cr)"

private:
    std::vector<Rational> coords_;
};

// Signature (1, r) pairing: a.h*b.h - sum a.e(i)*b.e(i).
Rational intersect(const DivisorClass& a, const DivisorClass& b);

// -K = 3H - E_1 - ... - E_r on the blow-up of P^2 at r points.
DivisorClass anticanonical_class(size_t num_exceptional);

// degree K^2 = 9 - r.
long anticanonical_degree(size_t num_exceptional);

// All integral classes C with C^2 = -1 and C.(-K) = 1, sorted lexicographically.
// These are the (-1)-curve classes when the blown-up points are general.
std::vector<DivisorClass> minus_one_classes(size_t num_exceptional);

// Pairs (F, F') with F^2 = F'^2 = 0, F.(-K) = F'.(-K) = 2 and F + F' = -K.
// Nonempty only in degree 4 (r = 5), where there are five such pairs.
std::vector<std::pair<DivisorClass, DivisorClass>> zero_curve_pairs(size_t num_exceptional);

// Lower bound rank(Pic) >= 10 - d for a del Pezzo surface of degree d
// realized as a blow-up model; throws std::invalid_argument outside 1..9.
size_t picard_rank_lower_bound(long degree);

} // namespace delpezzo
