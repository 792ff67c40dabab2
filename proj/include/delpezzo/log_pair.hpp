// Symbolic log-pair engines: refutation lemmas for "not log canonical"
// claims, the convexity transform, and blow-up pullback bookkeeping. Curves
// here are formal: classes and local data are declared, not computed. The
// engines check necessary conditions, so the verdicts are "refuted" or
// "consistent", never a proof of non-log-canonicity.
#pragma once

#include "delpezzo/picard.hpp"
#include "delpezzo/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace delpezzo {

class SymbolicCurve {
public:
    SymbolicCurve(std::string label, DivisorClass cls);

    const std::string& label() const { return label_; }
    const DivisorClass& cls() const { return cls_; }

    void declare_multiplicity(const std::string& point, long m);
    void declare_intersection(const std::string& other_curve, const std::string& point, long m);
    void declare_smooth(const std::string& point);

    std::optional<long> multiplicity_at(const std::string& point) const;
    std::optional<long> intersection_at(const std::string& other_curve,
                                        const std::string& point) const;
    bool declared_smooth(const std::string& point) const { return smooth_.count(point) > 0; }

    const std::map<std::string, long>& multiplicities() const { return mult_; }
    const std::map<std::pair<std::string, std::string>, long>& intersections() const {
        return inter_;
    }
    const std::set<std::string>& smooth_points() const { return smooth_; }

    bool operator==(const SymbolicCurve& o) const = default;

private:
    std::string label_;
    DivisorClass cls_;
    std::map<std::string, long> mult_;                          // point -> mult_P(curve)
    std::map<std::pair<std::string, std::string>, long> inter_; // (other, point) -> I_P
    std::set<std::string> smooth_;                              // points declared smooth
};

struct QTerm {
    Rational coeff; // >= 0
    SymbolicCurve curve;
    bool operator==(const QTerm& o) const = default;
};

// Formal Q-divisor: rational combination of distinct symbolic curves whose
// classes live in a common lattice (H, E_1, ..., E_r).
class QDivisor {
public:
    QDivisor(std::vector<QTerm> terms, size_t lattice_rank);

    const std::vector<QTerm>& terms() const { return terms_; }
    size_t lattice_rank() const { return rank_; }
    size_t num_exceptional() const { return rank_ - 1; }

    DivisorClass cls() const;
    // Sum of coefficient * declared multiplicity; throws when a component has
    // no declaration at the point.
    Rational mult_at(const std::string& point) const;
    const QTerm* find(const std::string& label) const;
    // Declared local intersection of two components at a point, read from
    // either side; throws when neither side declares it.
    long intersection_at(size_t i, size_t j, const std::string& point) const;

    bool operator==(const QDivisor& o) const = default;

private:
    std::vector<QTerm> terms_;
    size_t rank_;
};

enum class PairVerdict { refuted, consistent };

// Outcome of testing a "not log canonical at P" claim against one of the
// necessary conditions.
struct PairRefutation {
    PairVerdict verdict;
    std::string lemma;  // which inequality was applied
    Rational value;     // the computed quantity the verdict rests on
    std::string detail; // human-readable restatement with the numbers filled in
};

struct DegreeCheck {
    bool pass;
    Rational value; // (-K) . D
    long expected;  // K^2 of the lattice
};

// Pairs the divisor class against -K and compares with the degree of the
// ambient del Pezzo lattice.
DegreeCheck anticanonical_degree_check(const QDivisor& d);

// A not-log-canonical point of (S, D) has mult_P(D) > 1, so a claim with
// mult_P(D) <= 1 is refuted.
PairRefutation multiplicity_refute(const QDivisor& d, const std::string& point,
                                   bool claim_not_lc);

struct ConvexityResult {
    Rational c;  // max b_i / a_i
    Rational mu; // 1 / (c - 1)
    QDivisor d_mu;
    std::string dropped; // label of the component with new coefficient 0
};

// Given D and T with equal classes, T != D, Supp(T) inside Supp(D): the
// combination (1 + mu) D - mu T is effective, has the same class, and loses
// the component where b_i / a_i peaks. Ties break to the lowest index.
ConvexityResult convexity_transform(const QDivisor& d, const QDivisor& t);

// For a component C_j smooth at P with coefficient a_j <= 1: not-lc at P
// forces sum_{i != j} a_i I_P(C_j, C_i) > 1. Refutes claims violating it.
PairRefutation adjunction_refute(const QDivisor& d, size_t j, const std::string& point);

struct PulledBackPair {
    QDivisor transformed;     // strict transforms plus the exceptional term
    Rational exc_coefficient; // mult_P(D) - 1
    std::string exc_label;
    std::string center; // the blown-up point
    // Declarations at the center consumed by the transform, kept so the
    // contraction can restore them.
    std::map<std::string, long> center_mults;
    std::map<std::pair<std::string, std::string>, long> center_intersections;
    std::set<std::string> center_smooth;
    // Constraints that any further not-lc analysis on the exceptional curve
    // must respect.
    std::vector<std::string> ledger;
};

// Log pullback under the blow-up of the point: strict transforms pick up a
// final class coordinate -mult_P, the exceptional curve enters with
// coefficient mult_P(D) - 1. Requires mult_P(D) >= 1 so the result stays
// effective.
PulledBackPair blowup_pullback(const QDivisor& d, const std::string& point);

// Inverse bookkeeping: drops the exceptional term, strips the final class
// coordinate, and restores the declarations consumed at the center.
QDivisor contract_back(const PulledBackPair& p);

// Labels carrying coefficient > 1: the pair is not log canonical along each.
std::vector<std::string> not_lc_along_curves(const QDivisor& d);

} // namespace delpezzo
