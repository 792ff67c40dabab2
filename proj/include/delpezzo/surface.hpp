// Concrete geometry: cubic surfaces queried through tangent hyperplane
// sections, plane blow-up models of degree 4..8 queried through incidence
// with lines and conics, and branch quartics of degree-2 covers queried
// through tangent-line contact. Each query produces the point profile the
// alpha table consumes, together with the evidence used.
#pragma once

#include "delpezzo/alpha.hpp"
#include "delpezzo/factor.hpp"
#include "delpezzo/germ.hpp"
#include "delpezzo/multipoly.hpp"

#include <string>
#include <vector>

namespace delpezzo {

// A point of projective 3-space that has been checked to lie on a given
// surface and to be a smooth point of it.
struct SurfacePoint {
    std::vector<FieldElement> coords;
    std::string str() const;
};

class CubicSurface {
public:
    // Needs a nonzero homogeneous cubic in four variables with no linear
    // factor over its coefficient field. Global smoothness is not decided
    // here; it is certified point by point as points are queried.
    explicit CubicSurface(MultiPoly form);

    const MultiPoly& form() const { return form_; }
    const FieldPtr& field() const { return form_.field(); }

    bool contains(const std::vector<FieldElement>& coords) const;
    std::vector<FieldElement> gradient(const std::vector<FieldElement>& coords) const;

    // Validates projective coordinates, membership, and smoothness there.
    SurfacePoint point(std::vector<FieldElement> coords) const;
    SurfacePoint point(const std::string& text) const;

private:
    MultiPoly form_;
};

// The six shapes of a tangent hyperplane section of a smooth cubic surface at
// the point of tangency:
//   a: three lines through the point            (threshold 2/3)
//   b: a line and a conic, tangent at the point (threshold 3/4)
//   c: a cuspidal cubic                         (threshold 5/6)
//   d: a nodal cubic, irreducible               (threshold 1)
//   e: three lines, two through the point       (threshold 1)
//   f: a line and a conic crossing at the point (threshold 1)
enum class TangentCase { a, b, c, d, e, f };
std::string tangent_case_name(TangentCase c);
std::string tangent_case_description(TangentCase c);

struct SectionComponent {
    int degree;                     // 1, 2, or 3
    std::string kind;               // "line", "smooth conic", "conjugate line pair", ...
    bool through_point;
    std::vector<FieldElement> line; // the section-plane coordinates of a degree-1 component
};

struct TangentSectionReport {
    std::vector<FieldElement> plane;              // tangent plane coefficients
    std::vector<std::vector<FieldElement>> frame; // the point, then two vectors spanning the plane
    MultiPoly section;   // restricted cubic in frame coordinates; the point sits at (1:0:0)
    MultiPoly germ_poly; // the section with the first frame coordinate set to 1
    GermClassification local_type;
    Rational lct_at_point;
    TangentCase tangent_case;
    std::vector<SectionComponent> components;
};

// The case is decided from the local type and cross-checked against the
// component structure; disagreement is a logic error. Component kinds are
// reported relative to the coefficient field.
TangentSectionReport tangent_section(const CubicSurface& s, const SurfacePoint& p);

// Case a by classification, cross-checked against multiplicity 3.
bool is_eckardt(const CubicSurface& s, const SurfacePoint& p);

struct SurfaceLine {
    std::vector<FieldElement> plane_a, plane_b; // the line is their common zero locus
};

// The field-rational line components of the tangent section through the
// point. Conjugate lines that only split over an extension are not listed.
std::vector<SurfaceLine> lines_through_point(const CubicSurface& s, const SurfacePoint& p);

PointProfile cubic_point_profile(const TangentSectionReport& report);

// Table value at the point, cross-checked against the local threshold of the
// tangent section: the two routes must agree.
AlphaResult alpha_at_cubic_point(const CubicSurface& s, const SurfacePoint& p);

// Projectively distinct rational points with integer coordinates bounded by
// height in absolute value, restricted to smooth surface points.
std::vector<SurfacePoint> scan_cubic_points(const CubicSurface& s, long height);

// ---- plane blow-up models of degree 4..8 ----

struct PlanePoint {
    PlanePoint(Rational ax, Rational ay);               // affine (x, y, 1)
    PlanePoint(Rational ax, Rational ay, Rational az);  // homogeneous, normalized
    Rational x, y, z;
    bool operator==(const PlanePoint& o) const = default;
    std::string str() const;
};

class BlowupModel {
public:
    // 9 - degree distinct base points, no three collinear. The generality
    // certificates are recomputed here; a violation stops construction.
    BlowupModel(int degree, std::vector<PlanePoint> base_points);

    int degree() const { return degree_; }
    const std::vector<PlanePoint>& base_points() const { return pts_; }
    bool no_three_collinear() const { return no3_; }
    bool no_six_on_conic() const { return no6_; }

private:
    int degree_;
    std::vector<PlanePoint> pts_;
    bool no3_, no6_;
};

// Profile of a proper point of the model: membership in the lines through
// base-point pairs and, in degree 4, the conic through all five base points,
// plus the tangent zero-curve-pair test. A base point itself is rejected;
// query it as an infinitely-near direction instead.
PointProfile model_point_profile(const BlowupModel& m, const PlanePoint& p);

// Profile of a point on the exceptional curve over base point `base`, given
// by the direction of the line toward `toward`. One level only: points
// infinitely near to these are out of range.
PointProfile model_point_profile(const BlowupModel& m, size_t base, const PlanePoint& toward);

struct AlphaBound {
    Rational value;      // minimum over the points evaluated
    bool exact;          // true when alpha is constant on the surface
    std::string witness; // the minimizing point and the table row it hit
};

// Witnessed upper bound for the alpha invariant: the minimum of the table
// value over the samples and over one enumerated point on a (-1)-curve when
// the degree has one (4, 5, 7). Degrees 6 and 8 are constant and exact.
AlphaBound alpha_invariant(const BlowupModel& m, const std::vector<PlanePoint>& samples);

// ---- branch quartics of degree-2 covers ----

class Dp2BranchModel {
public:
    // Needs a nonzero homogeneous quartic in three variables with no linear
    // factor over its field. Smoothness is certified at queried points.
    explicit Dp2BranchModel(MultiPoly quartic);

    const MultiPoly& quartic() const { return q_; }
    const FieldPtr& field() const { return q_.field(); }

private:
    MultiPoly q_;
};

// Contact order of the branch quartic with its tangent line at a point of the
// quartic; a point off the quartic gets contact "none". A singular point of
// the quartic is rejected.
PointProfile dp2_point_profile(const Dp2BranchModel& m, const std::vector<FieldElement>& p);

// True when a linear form over the field divides the ternary form. Candidates
// are read off restrictions to coordinate lines and verified by substitution.
bool ternary_has_linear_factor(const MultiPoly& form);

} // namespace delpezzo
