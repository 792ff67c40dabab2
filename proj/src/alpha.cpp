#include "delpezzo/alpha.hpp"

#include <stdexcept>

namespace delpezzo {

void validate_profile(const PointProfile& p) {
    std::vector<std::string> bad;
    if (p.degree < 1 || p.degree > 9)
        bad.push_back("degree must be 1..9, got " + std::to_string(p.degree));
    if (p.eckardt && p.degree != 3) bad.push_back("eckardt applies only in degree 3");
    if (p.tacnodal_section && p.degree != 3)
        bad.push_back("tacnodal_section applies only in degree 3");
    if (p.cuspidal_section && p.degree != 3)
        bad.push_back("cuspidal_section applies only in degree 3");
    if (int(p.eckardt) + int(p.tacnodal_section) + int(p.cuspidal_section) > 1)
        bad.push_back("a tangent section has one type: eckardt, tacnodal and "
                      "cuspidal are mutually exclusive");
    if (p.on_special_dp7_curve && p.degree != 7)
        bad.push_back("on_special_dp7_curve applies only in degree 7");
    if (p.tangent_zero_curve_pair && p.degree != 4)
        bad.push_back("tangent_zero_curve_pair applies only in degree 4");
    if (p.dp2_branch_contact != Dp2Contact::none && p.degree != 2)
        bad.push_back("dp2_branch_contact applies only in degree 2");
    if (p.dp1_cuspidal_member && p.degree != 1)
        bad.push_back("dp1_cuspidal_member applies only in degree 1");
    if (p.dp8_model != Dp8Model::unspecified && p.degree != 8)
        bad.push_back("dp8_model applies only in degree 8");
    if (p.degree == 8 && p.dp8_model == Dp8Model::unspecified)
        bad.push_back("degree 8 requires an explicit dp8_model: the two "
                      "deformation classes have different alpha");
    if (p.on_minus_one_curve &&
        (p.degree == 9 || (p.degree == 8 && p.dp8_model == Dp8Model::quadric)))
        bad.push_back("the surface has no (-1)-curves, on_minus_one_curve "
                      "cannot hold");
    if (!bad.empty()) {
        std::string msg = "invalid point profile:";
        for (const auto& b : bad) msg += " " + b + ";";
        throw std::invalid_argument(msg);
    }
}

AlphaResult alpha_at_point(const PointProfile& p, ProfileProvenance prov) {
    validate_profile(p);
    AlphaResult r;
    r.provenance = prov == ProfileProvenance::computed ? "computed-profile" : "declared-profile";
    auto row = [&](long num, long den, const std::string& text) {
        r.value = Rational(num, den);
        r.justification = text;
    };
    switch (p.degree) {
    case 9:
        row(1, 3, "degree 9 (the plane): alpha = 1/3 at every point");
        break;
    case 8:
        if (p.dp8_model == Dp8Model::quadric)
            row(1, 2, "degree 8, smooth quadric: alpha = 1/2 at every point");
        else
            row(1, 3, "degree 8, blow-up of the plane: alpha = 1/3 at every point");
        break;
    case 7:
        if (p.on_special_dp7_curve)
            row(1, 3, "degree 7, point on the line joining the two centers: alpha = 1/3");
        else
            row(1, 2, "degree 7, point off the line joining the two centers: alpha = 1/2");
        break;
    case 6:
        row(1, 2, "degree 6: alpha = 1/2 at every point");
        break;
    case 5:
        if (p.on_minus_one_curve)
            row(1, 2, "degree 5, point on a (-1)-curve: alpha = 1/2");
        else
            row(2, 3, "degree 5, point off the (-1)-curves: alpha = 2/3");
        break;
    case 4:
        if (p.on_minus_one_curve)
            row(2, 3, "degree 4, point on a (-1)-curve: alpha = 2/3");
        else if (p.tangent_zero_curve_pair)
            row(3, 4, "degree 4, tangent fibers of a zero-curve pair at the point: alpha = 3/4");
        else
            row(5, 6, "degree 4, generic point: alpha = 5/6");
        break;
    case 3:
        if (p.eckardt)
            row(2, 3, "cubic surface, Eckardt point: alpha = 2/3");
        else if (p.tacnodal_section)
            row(3, 4, "cubic surface, tacnodal tangent section: alpha = 3/4");
        else if (p.cuspidal_section)
            row(5, 6, "cubic surface, cuspidal tangent section: alpha = 5/6");
        else
            row(1, 1, "cubic surface, nodal tangent section: alpha = 1");
        break;
    case 2:
        if (p.dp2_branch_contact == Dp2Contact::four_or_more)
            row(3, 4, "degree 2, branch contact >= 4 (tacnodal anticanonical member): alpha = 3/4");
        else if (p.dp2_branch_contact == Dp2Contact::three)
            row(5, 6, "degree 2, branch contact 3 (cuspidal anticanonical member): alpha = 5/6");
        else
            row(1, 1, "degree 2, branch contact at most 2: alpha = 1");
        break;
    case 1:
        if (p.dp1_cuspidal_member)
            row(5, 6, "degree 1, cuspidal anticanonical member at the point: alpha = 5/6");
        else
            row(1, 1, "degree 1, no cuspidal anticanonical member at the point: alpha = 1");
        break;
    default:
        throw std::logic_error("alpha_at_point: unreachable degree");
    }
    return r;
}

std::string alpha_row_id(const PointProfile& p) {
    validate_profile(p);
    switch (p.degree) {
    case 9: return "degree 9";
    case 8:
        return p.dp8_model == Dp8Model::quadric ? "degree 8, quadric" : "degree 8, plane blow-up";
    case 7: return p.on_special_dp7_curve ? "degree 7, special curve" : "degree 7, generic";
    case 6: return "degree 6";
    case 5: return p.on_minus_one_curve ? "degree 5, on a (-1)-curve" : "degree 5, generic";
    case 4:
        if (p.on_minus_one_curve) return "degree 4, on a (-1)-curve";
        if (p.tangent_zero_curve_pair) return "degree 4, tangent zero-curve pair";
        return "degree 4, generic";
    case 3:
        if (p.eckardt) return "degree 3, Eckardt";
        if (p.tacnodal_section) return "degree 3, tacnodal";
        if (p.cuspidal_section) return "degree 3, cuspidal";
        return "degree 3, generic";
    case 2:
        if (p.dp2_branch_contact == Dp2Contact::four_or_more) return "degree 2, contact >= 4";
        if (p.dp2_branch_contact == Dp2Contact::three) return "degree 2, contact 3";
        return "degree 2, generic";
    case 1: return p.dp1_cuspidal_member ? "degree 1, cuspidal member" : "degree 1, generic";
    default: throw std::logic_error("alpha_row_id: unreachable degree");
    }
}

std::vector<std::string> all_alpha_rows() {
    return {
        "degree 9",
        "degree 8, plane blow-up",
        "degree 8, quadric",
        "degree 7, special curve",
        "degree 7, generic",
        "degree 6",
        "degree 5, on a (-1)-curve",
        "degree 5, generic",
        "degree 4, on a (-1)-curve",
        "degree 4, tangent zero-curve pair",
        "degree 4, generic",
        "degree 3, Eckardt",
        "degree 3, tacnodal",
        "degree 3, cuspidal",
        "degree 3, generic",
        "degree 2, contact >= 4",
        "degree 2, contact 3",
        "degree 2, generic",
        "degree 1, cuspidal member",
        "degree 1, generic",
    };
}

const char* dp2_contact_name(Dp2Contact c) {
    switch (c) {
    case Dp2Contact::none: return "none";
    case Dp2Contact::two: return "two";
    case Dp2Contact::three: return "three";
    case Dp2Contact::four_or_more: return "four_or_more";
    }
    throw std::logic_error("dp2_contact_name: bad enum");
}

CylinderVerdict cylinder_verdict(int degree) {
    if (degree < 1 || degree > 9)
        throw std::invalid_argument("cylinder_verdict: degree must be 1..9, got " +
                                    std::to_string(degree));
    CylinderVerdict v;
    v.degree = degree;
    if (degree >= 4) {
        v.action_exists = true;
        v.citation = "degree >= 4: the anticanonical system contains a cylinder-inducing "
                     "member, so the affine cone admits a nontrivial Ga-action";
    } else {
        v.action_exists = false;
        v.citation = "degree <= 3: every anticanonical polar cylinder is obstructed, so the "
                     "affine cone admits no nontrivial Ga-action";
    }
    return v;
}

} // namespace delpezzo
