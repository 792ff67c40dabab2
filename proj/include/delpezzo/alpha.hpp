// The alpha table: the global log canonical threshold of a del Pezzo surface
// at a point is a function of the degree and a short list of special-position
// flags. Profiles carry those flags; evaluation validates them, dispatches on
// the table, and cites the row used.
#pragma once

#include "delpezzo/rational.hpp"

#include <string>
#include <vector>

namespace delpezzo {

// Degree 8 splits into two deformation classes with different alpha, and
// nothing in a profile can tell them apart, so the model kind is explicit.
enum class Dp8Model { unspecified, blowup_of_plane, quadric };

// Order of contact between the branch quartic of a degree-2 surface and its
// tangent line at the point under the double cover.
enum class Dp2Contact { none, two, three, four_or_more };

struct PointProfile {
    int degree = 3;
    bool eckardt = false;                 // degree 3: three coplanar lines through the point
    bool tacnodal_section = false;        // degree 3: tangent section is a line and a tangent conic
    bool cuspidal_section = false;        // degree 3: tangent section is a cuspidal cubic
    bool on_minus_one_curve = false;      // any degree <= 7, or 8 as a plane blow-up
    bool on_special_dp7_curve = false;    // degree 7: on the line joining the two centers
    bool tangent_zero_curve_pair = false; // degree 4: both fibers of a zero-curve
                                          // pair through the point are tangent
    Dp2Contact dp2_branch_contact = Dp2Contact::none; // degree 2 only
    bool dp1_cuspidal_member = false;     // degree 1: the anticanonical member
                                          // singular at the point is cuspidal
    Dp8Model dp8_model = Dp8Model::unspecified; // required exactly when degree = 8

    bool operator==(const PointProfile& o) const = default;
};

// Throws std::invalid_argument listing every flag that contradicts the degree.
void validate_profile(const PointProfile& p);

enum class ProfileProvenance { computed, declared };

struct AlphaResult {
    Rational value;            // one of 1/3, 1/2, 2/3, 3/4, 5/6, 1
    std::string justification; // the table row plus the evidence used
    std::string provenance;    // "computed-profile" or "declared-profile"
};

AlphaResult alpha_at_point(const PointProfile& p,
                           ProfileProvenance prov = ProfileProvenance::declared);

// Canonical identifier of the table row a profile lands on, e.g.
// "degree 4, tangent zero-curve pair". Constant on profiles sharing a row.
std::string alpha_row_id(const PointProfile& p);

// Every row identifier, in table order. Coverage checks compare against it.
std::vector<std::string> all_alpha_rows();

const char* dp2_contact_name(Dp2Contact c);

struct CylinderVerdict {
    int degree;
    bool action_exists; // a nontrivial Ga-action on the affine cone
    std::string citation;
};

// Degrees 4..9 carry an anticanonical polar cylinder, degrees 1..3 do not.
CylinderVerdict cylinder_verdict(int degree);

} // namespace delpezzo
