// Plane curve germs at the origin, resolved by point blow-ups. The log
// canonical threshold is read off the multiplicities and discrepancies of the
// exceptional divisors that appear.
#pragma once

#include "delpezzo/multipoly.hpp"
#include "delpezzo/rational.hpp"

#include <string>
#include <vector>

namespace delpezzo {

// A reduced curve germ at the origin of the affine (u, v)-plane: a nonzero
// bivariate polynomial over a number field vanishing at (0, 0).
class PlaneCurveGerm {
public:
    explicit PlaneCurveGerm(MultiPoly f);

    const MultiPoly& poly() const { return f_; }
    const FieldPtr& field() const { return f_.field(); }
    int multiplicity() const { return f_.order(); }

    // Germ after the invertible linear substitution
    // (u, v) -> (a u + b v, c u + d v).
    PlaneCurveGerm linear_change(const Rational& a, const Rational& b, const Rational& c,
                                 const Rational& d) const;

private:
    MultiPoly f_;
};

enum class GermType { smooth, node, cusp, tacnode, ordinary_triple, other };
std::string germ_type_name(GermType t);

// One blow-up in the resolution: multiplicity of the strict transform at the
// center, multiplicity of the total transform along the new exceptional
// divisor, and its discrepancy.
struct BlowupRecord {
    int strict_mult;       // m at the center
    long long total_mult;  // M = m + sum of M over exceptionals through the center
    long long discrepancy; // k = 1 + sum of k over exceptionals through the center
};

struct LctCertificate {
    Rational lct;                      // min(1, min over blow-ups of (k + 1) / M)
    std::vector<BlowupRecord> blowups; // in traversal order; empty for a germ
                                       // that is already smooth
};

// Resolve the germ by blow-ups until the total transform has simple normal
// crossings, then report the threshold. Directions falling outside the
// coefficient field are fine when they are transverse smooth cluster points;
// otherwise resolution cannot continue and std::runtime_error is thrown. The
// same error reports failure to terminate within 32 blow-ups, which happens
// exactly when the input has a repeated component.
LctCertificate lct_via_blowups(const PlaneCurveGerm& germ);

struct GermClassification {
    GermType type;
    std::vector<int> multiplicity_sequence; // strict-transform multiplicities at the centers
    bool branches_conjugate = false; // node whose two tangent directions are
                                     // conjugate over the coefficient field
};

GermClassification classify_germ(const PlaneCurveGerm& germ);

// Threshold by germ type; throws std::invalid_argument for GermType::other,
// whose threshold is not a function of the type alone.
Rational lct_table(GermType type);

// Threshold of the weighted germ c * f for c > 0: the largest t with
// (A^2, t*c*f) log canonical, i.e. lct(f) / c.
Rational weighted_lct(const PlaneCurveGerm& germ, const Rational& coeff);

} // namespace delpezzo
