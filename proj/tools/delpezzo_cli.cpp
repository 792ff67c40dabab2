// Command-line front end. One subcommand per engine: classify and lines for
// cubic surfaces, alpha for every evaluation route, lct for plane germs,
// pair-check for the refutation lemmas, descent for the involution iteration,
// verdict for the cylinder table, fixtures for the pinned corpus. Exit code 0
// is success, 1 is a refutation or contradiction result (the report is still
// valid), 2 is an input error. --json swaps the human report for a schema-1
// JSON document; identical inputs produce byte-identical output.
#include "delpezzo/alpha.hpp"
#include "delpezzo/descent.hpp"
#include "delpezzo/fixtures.hpp"
#include "delpezzo/germ.hpp"
#include "delpezzo/log_pair.hpp"
#include "delpezzo/model_io.hpp"
#include "delpezzo/picard.hpp"
#include "delpezzo/poly_parse.hpp"
#include "delpezzo/surface.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace delpezzo;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string field_str(const FieldPtr& f) {
    if (f->is_rationals()) return "Q";
    return "Q(" + f->generator_name() + ") with " + f->modulus().str(f->generator_name()) +
           " = 0";
}

// Coefficients that are sums or differences get parenthesized so the printed
// linear form reads unambiguously.
std::string coeff_factor(const FieldElement& c, const std::string& var) {
    std::string s = c.str();
    if (s == "1") return var;
    if (s == "-1") return "-" + var;
    bool simple = s.find_first_of("+ ") == std::string::npos && s.find('-', 1) == std::string::npos;
    if (simple) return s + "*" + var;
    return "(" + s + ")*" + var;
}

// Printed with the first nonzero coefficient scaled to 1; projective
// equations are only defined up to scale anyway.
std::string linear_form_str(std::vector<FieldElement> coeffs,
                            const std::vector<std::string>& names) {
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        FieldElement inv = c.inverse();
        for (auto& x : coeffs) x = x * inv;
        break;
    }
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        std::string term = coeff_factor(coeffs[i], names[i]);
        if (out.empty()) {
            out = term;
        } else if (term.size() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out.empty() ? "0" : out;
}

// Names for the tangent-plane frame coordinates, dodging the field generator.
std::vector<std::string> frame_names(const FieldPtr& f) {
    std::vector<std::string> out;
    for (const char* n : {"s", "t", "u", "v", "w", "r"}) {
        if (!f->is_rationals() && f->generator_name() == n) continue;
        out.push_back(n);
        if (out.size() == 3) break;
    }
    return out;
}

const char* dp8_model_name(Dp8Model m) {
    switch (m) {
    case Dp8Model::unspecified: return "unspecified";
    case Dp8Model::blowup_of_plane: return "plane-blowup";
    case Dp8Model::quadric: return "quadric";
    }
    return "unspecified";
}

ordered_json profile_json(const PointProfile& p) {
    ordered_json j;
    j["degree"] = p.degree;
    j["eckardt"] = p.eckardt;
    j["tacnodal_section"] = p.tacnodal_section;
    j["cuspidal_section"] = p.cuspidal_section;
    j["on_minus_one_curve"] = p.on_minus_one_curve;
    j["on_special_dp7_curve"] = p.on_special_dp7_curve;
    j["tangent_zero_curve_pair"] = p.tangent_zero_curve_pair;
    j["dp2_branch_contact"] = dp2_contact_name(p.dp2_branch_contact);
    j["dp1_cuspidal_member"] = p.dp1_cuspidal_member;
    j["dp8_model"] = dp8_model_name(p.dp8_model);
    return j;
}

std::string profile_text(const PointProfile& p) {
    std::string out = "degree " + std::to_string(p.degree);
    if (p.eckardt) out += ", eckardt";
    if (p.tacnodal_section) out += ", tacnodal section";
    if (p.cuspidal_section) out += ", cuspidal section";
    if (p.on_minus_one_curve) out += ", on a (-1)-curve";
    if (p.on_special_dp7_curve) out += ", on the special curve";
    if (p.tangent_zero_curve_pair) out += ", tangent zero-curve pair";
    if (p.dp2_branch_contact != Dp2Contact::none)
        out += std::string(", branch contact ") + dp2_contact_name(p.dp2_branch_contact);
    if (p.dp1_cuspidal_member) out += ", cuspidal anticanonical member";
    if (p.dp8_model != Dp8Model::unspecified)
        out += std::string(", ") + dp8_model_name(p.dp8_model);
    return out;
}

void emit(bool as_json, const ordered_json& doc, const std::string& text) {
    if (as_json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

// ---- classify ----

struct ClassifyArgs {
    std::string surface;
    std::string point;
    bool json = false;
};

int run_classify(const ClassifyArgs& a) {
    SurfaceDescription desc = parse_surface_description(read_text_file(a.surface));
    CubicSurface s(desc.form);
    SurfacePoint p = s.point(a.point);
    TangentSectionReport rep = tangent_section(s, p);
    AlphaResult alpha = alpha_at_cubic_point(s, p);
    PointProfile profile = cubic_point_profile(rep);
    bool eckardt = is_eckardt(s, p);
    auto lines = lines_through_point(s, p);

    std::vector<std::string> frame = frame_names(desc.field);
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "classify";
    j["field"] = field_str(desc.field);
    j["field_relative"] = true;
    j["surface"] = desc.form.str(desc.variables);
    j["point"] = p.str();
    j["tangent_plane"] = linear_form_str(rep.plane, desc.variables);
    j["tangent_case"] = tangent_case_name(rep.tangent_case);
    j["case_description"] = tangent_case_description(rep.tangent_case);
    j["section"] = rep.section.str(frame);
    j["germ"] = rep.germ_poly.str({frame[1], frame[2]});
    j["germ_type"] = germ_type_name(rep.local_type.type);
    j["multiplicity"] = rep.germ_poly.order();
    j["multiplicity_sequence"] = rep.local_type.multiplicity_sequence;
    j["branches_conjugate"] = rep.local_type.branches_conjugate;
    j["local_threshold"] = rep.lct_at_point.str();
    ordered_json comps = ordered_json::array();
    for (const auto& c : rep.components) {
        ordered_json cj;
        cj["degree"] = c.degree;
        cj["kind"] = c.kind;
        cj["through_point"] = c.through_point;
        if (!c.line.empty()) cj["equation"] = linear_form_str(c.line, frame);
        comps.push_back(cj);
    }
    j["components"] = comps;
    j["rational_lines"] = (int)lines.size();
    j["eckardt"] = eckardt;
    j["row"] = alpha_row_id(profile);
    j["alpha"] = alpha.value.str();
    j["provenance"] = alpha.provenance;
    j["citation"] = alpha.justification;

    std::ostringstream t;
    t << "surface: " << desc.form.str(desc.variables) << " = 0\n";
    t << "field: " << field_str(desc.field) << " (answers are relative to this field)\n";
    t << "point: " << p.str() << "\n";
    t << "tangent plane: " << linear_form_str(rep.plane, desc.variables) << " = 0\n";
    t << "tangent section: case " << tangent_case_name(rep.tangent_case) << ", "
      << tangent_case_description(rep.tangent_case) << "\n";
    t << "local type: " << germ_type_name(rep.local_type.type) << ", multiplicity "
      << rep.germ_poly.order() << ", threshold " << rep.lct_at_point.str() << "\n";
    t << "section components (frame coordinates " << frame[0] << ", " << frame[1] << ", "
      << frame[2] << "; the point is (1 : 0 : 0)):\n";
    for (const auto& c : rep.components) {
        t << "  - " << c.kind << (c.through_point ? " through the point" : " off the point");
        if (!c.line.empty()) t << ": " << linear_form_str(c.line, frame) << " = 0";
        t << "\n";
    }
    t << "rational lines through the point: " << lines.size() << "\n";
    t << "Eckardt point: " << (eckardt ? "yes" : "no") << "\n";
    t << "alpha at the point: " << alpha.value.str() << " [" << alpha.provenance << "]\n";
    t << "citation: " << alpha.justification << "\n";

    emit(a.json, j, t.str());
    return 0;
}

// ---- lines ----

struct LinesArgs {
    std::string surface;
    std::string point;
    bool json = false;
};

int run_lines(const LinesArgs& a) {
    SurfaceDescription desc = parse_surface_description(read_text_file(a.surface));
    CubicSurface s(desc.form);
    SurfacePoint p = s.point(a.point);
    auto lines = lines_through_point(s, p);

    ordered_json j;
    j["schema"] = 1;
    j["command"] = "lines";
    j["field"] = field_str(desc.field);
    j["field_relative"] = true;
    j["surface"] = desc.form.str(desc.variables);
    j["point"] = p.str();
    j["count"] = (int)lines.size();
    ordered_json arr = ordered_json::array();
    for (const auto& l : lines) {
        ordered_json lj;
        lj["plane_a"] = linear_form_str(l.plane_a, desc.variables);
        lj["plane_b"] = linear_form_str(l.plane_b, desc.variables);
        arr.push_back(lj);
    }
    j["lines"] = arr;
    j["citation"] = "lines are the degree-1 components of the tangent section defined over "
                    "the coefficient field";

    std::ostringstream t;
    t << "surface: " << desc.form.str(desc.variables) << " = 0\n";
    t << "field: " << field_str(desc.field) << " (answers are relative to this field)\n";
    t << "lines through " << p.str() << ": " << lines.size() << "\n";
    for (size_t i = 0; i < lines.size(); ++i) {
        t << "  " << (i + 1) << ": " << linear_form_str(lines[i].plane_a, desc.variables)
          << " = 0  and  " << linear_form_str(lines[i].plane_b, desc.variables) << " = 0\n";
    }
    t << "citation: lines are the degree-1 components of the tangent section defined over "
         "the coefficient field\n";

    emit(a.json, j, t.str());
    return 0;
}

// ---- lct ----

struct LctArgs {
    std::string germ;
    std::string vars = "x, y";
    std::string coeff;
    bool json = false;
};

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!isspace((unsigned char)c)) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int run_lct(const LctArgs& a) {
    std::vector<std::string> names = split_names(a.vars);
    if (names.size() != 2 || names[0].empty() || names[1].empty())
        throw std::invalid_argument("lct needs exactly two variable names, got \"" + a.vars +
                                    "\"");
    FieldPtr q = NumberField::rationals();
    PlaneCurveGerm germ(parse_polynomial(a.germ, q, names));
    GermClassification cls = classify_germ(germ);
    LctCertificate cert = lct_via_blowups(germ);

    std::string citation;
    if (cls.type == GermType::other) {
        citation = "threshold from the resolution: min over blow-ups of (k + 1)/M";
    } else {
        Rational table = lct_table(cls.type);
        if (table != cert.lct)
            throw std::logic_error("lct: table value " + table.str() +
                                   " disagrees with the resolution value " + cert.lct.str());
        citation = "germ type " + germ_type_name(cls.type) + ": threshold " + cert.lct.str() +
                   ", confirmed by the resolution";
    }

    ordered_json j;
    j["schema"] = 1;
    j["command"] = "lct";
    j["germ"] = a.germ;
    j["variables"] = names;
    j["field"] = field_str(q);
    j["type"] = germ_type_name(cls.type);
    j["multiplicity"] = germ.multiplicity();
    j["multiplicity_sequence"] = cls.multiplicity_sequence;
    j["branches_conjugate"] = cls.branches_conjugate;
    ordered_json arr = ordered_json::array();
    for (const auto& b : cert.blowups) {
        ordered_json bj;
        bj["strict_mult"] = b.strict_mult;
        bj["total_mult"] = b.total_mult;
        bj["discrepancy"] = b.discrepancy;
        bj["ratio"] = (Rational(Integer(b.discrepancy + 1)) / Rational(Integer(b.total_mult)))
                          .str();
        arr.push_back(bj);
    }
    j["blowups"] = arr;
    j["lct"] = cert.lct.str();

    std::ostringstream t;
    t << "germ: " << a.germ << " (variables " << names[0] << ", " << names[1] << " over Q)\n";
    t << "type: " << germ_type_name(cls.type) << ", multiplicity " << germ.multiplicity()
      << "\n";
    t << "multiplicity sequence:";
    for (int m : cls.multiplicity_sequence) t << " " << m;
    t << "\n";
    if (cert.blowups.empty()) {
        t << "blow-up tree: empty (the germ is already smooth)\n";
    } else {
        t << "blow-up tree (m = strict multiplicity, M = total multiplicity, k = "
             "discrepancy):\n";
        t << "  node   m   M    k    (k+1)/M\n";
        for (size_t i = 0; i < cert.blowups.size(); ++i) {
            const auto& b = cert.blowups[i];
            Rational ratio = Rational(Integer(b.discrepancy + 1)) / Rational(Integer(b.total_mult));
            char line[96];
            std::snprintf(line, sizeof line, "  %-6zu %-3d %-4lld %-4lld %s\n", i + 1,
                          b.strict_mult, b.total_mult, b.discrepancy, ratio.str().c_str());
            t << line;
        }
    }
    t << "lct: " << cert.lct.str() << "\n";

    if (!a.coeff.empty()) {
        Rational c = Rational::parse(a.coeff);
        Rational w = weighted_lct(germ, c);
        j["coefficient"] = c.str();
        j["weighted_lct"] = w.str();
        t << "threshold of " << c.str() << " * germ: " << w.str() << "\n";
    }
    j["citation"] = citation;
    t << "citation: " << citation << "\n";

    emit(a.json, j, t.str());
    return 0;
}

// ---- alpha ----

struct AlphaArgs {
    std::string surface, model, quartic;
    std::string point, toward;
    long base = -1;
    bool invariant = false;
    std::vector<std::string> samples;
    int degree = 0;
    bool has_degree = false;
    bool eckardt = false, tacnodal = false, cuspidal = false;
    bool on_minus_one = false, special_dp7 = false, tangent_pair = false;
    std::string contact, dp8;
    bool dp1_cuspidal = false;
    bool json = false;
};

Dp2Contact parse_contact(const std::string& s) {
    for (Dp2Contact c : {Dp2Contact::none, Dp2Contact::two, Dp2Contact::three,
                         Dp2Contact::four_or_more})
        if (s == dp2_contact_name(c)) return c;
    throw std::invalid_argument("unknown contact \"" + s +
                                "\"; expected none, two, three, or four_or_more");
}

Dp8Model parse_dp8(const std::string& s) {
    if (s == "plane-blowup") return Dp8Model::blowup_of_plane;
    if (s == "quadric") return Dp8Model::quadric;
    throw std::invalid_argument("unknown dp8 model \"" + s +
                                "\"; expected plane-blowup or quadric");
}

void alpha_common(ordered_json& j, std::ostringstream& t, const PointProfile& profile,
                  const AlphaResult& r) {
    j["profile"] = profile_json(profile);
    j["row"] = alpha_row_id(profile);
    j["value"] = r.value.str();
    j["justification"] = r.justification;
    j["provenance"] = r.provenance;
    t << "profile: " << profile_text(profile) << "\n";
    t << "row: " << alpha_row_id(profile) << "\n";
    t << "alpha: " << r.value.str() << " [" << r.provenance << "]\n";
    t << "citation: " << r.justification << "\n";
}

int run_alpha(const AlphaArgs& a) {
    int routes = (!a.surface.empty()) + (!a.model.empty()) + (!a.quartic.empty()) +
                 (a.has_degree ? 1 : 0);
    if (routes != 1)
        throw std::invalid_argument("alpha needs exactly one of --surface, --model, --quartic, "
                                    "or --degree");

    ordered_json j;
    j["schema"] = 1;
    j["command"] = "alpha";
    std::ostringstream t;

    if (!a.surface.empty()) {
        if (a.point.empty())
            throw std::invalid_argument("alpha --surface needs --point");
        SurfaceDescription desc = parse_surface_description(read_text_file(a.surface));
        CubicSurface s(desc.form);
        SurfacePoint p = s.point(a.point);
        TangentSectionReport rep = tangent_section(s, p);
        AlphaResult r = alpha_at_cubic_point(s, p);
        j["route"] = "cubic-surface";
        j["field"] = field_str(desc.field);
        j["field_relative"] = true;
        j["point"] = p.str();
        t << "route: cubic surface tangent section\n";
        t << "field: " << field_str(desc.field) << " (answers are relative to this field)\n";
        t << "point: " << p.str() << "\n";
        alpha_common(j, t, cubic_point_profile(rep), r);
        emit(a.json, j, t.str());
        return 0;
    }

    if (!a.model.empty()) {
        BlowupModel m = parse_blowup_model(read_text_file(a.model));
        j["route"] = a.invariant ? "model-invariant" : "blowup-model";
        j["degree"] = m.degree();
        ordered_json base = ordered_json::array();
        for (const auto& bp : m.base_points()) base.push_back(bp.str());
        j["base_points"] = base;

        if (a.invariant) {
            if (!a.point.empty() || a.base >= 0)
                throw std::invalid_argument("alpha --invariant does not take --point or --base");
            std::vector<PlanePoint> samples;
            for (const auto& s : a.samples) samples.push_back(parse_plane_point_text(s));
            AlphaBound bound = alpha_invariant(m, samples);
            j["samples"] = (int)samples.size();
            j["value"] = bound.value.str();
            j["exact"] = bound.exact;
            j["witness"] = bound.witness;
            j["citation"] = bound.witness;
            t << "route: alpha invariant of a plane blow-up model, degree " << m.degree()
              << "\n";
            t << "samples supplied: " << samples.size() << "\n";
            t << "alpha invariant: " << bound.value.str()
              << (bound.exact ? " (exact: alpha is constant on the surface)"
                              : " (witnessed upper bound)")
              << "\n";
            t << "witness: " << bound.witness << "\n";
            t << "citation: " << bound.witness << "\n";
            emit(a.json, j, t.str());
            return 0;
        }

        PointProfile profile;
        if (a.base >= 0) {
            if (a.toward.empty())
                throw std::invalid_argument("alpha --base needs --toward for the direction");
            PlanePoint dir = parse_plane_point_text(a.toward);
            profile = model_point_profile(m, (size_t)a.base, dir);
            j["base"] = a.base;
            j["toward"] = dir.str();
            t << "route: plane blow-up model, degree " << m.degree() << "\n";
            t << "point: on the exceptional curve over base point " << a.base << ", toward "
              << dir.str() << "\n";
        } else {
            if (a.point.empty())
                throw std::invalid_argument("alpha --model needs --point, or --base with "
                                            "--toward");
            PlanePoint p = parse_plane_point_text(a.point);
            profile = model_point_profile(m, p);
            j["point"] = p.str();
            t << "route: plane blow-up model, degree " << m.degree() << "\n";
            t << "point: " << p.str() << "\n";
        }
        AlphaResult r = alpha_at_point(profile, ProfileProvenance::computed);
        alpha_common(j, t, profile, r);
        emit(a.json, j, t.str());
        return 0;
    }

    if (!a.quartic.empty()) {
        if (a.point.empty())
            throw std::invalid_argument("alpha --quartic needs --point");
        SurfaceDescription desc = parse_surface_description(read_text_file(a.quartic));
        Dp2BranchModel m(desc.form);
        std::vector<FieldElement> p = parse_point(a.point, desc.field, 3);
        PointProfile profile = dp2_point_profile(m, p);
        AlphaResult r = alpha_at_point(profile, ProfileProvenance::computed);
        j["route"] = "dp2-branch";
        j["field"] = field_str(desc.field);
        j["field_relative"] = true;
        j["quartic"] = desc.form.str(desc.variables);
        ordered_json pj = ordered_json::array();
        for (const auto& c : p) pj.push_back(c.str());
        j["point"] = pj;
        t << "route: degree-2 branch quartic\n";
        t << "field: " << field_str(desc.field) << " (answers are relative to this field)\n";
        t << "quartic: " << desc.form.str(desc.variables) << " = 0\n";
        t << "point: (";
        for (size_t i = 0; i < p.size(); ++i) t << (i ? " : " : "") << p[i].str();
        t << ")\n";
        alpha_common(j, t, profile, r);
        emit(a.json, j, t.str());
        return 0;
    }

    // Declared profile: the flags are taken at face value and validated.
    PointProfile profile;
    profile.degree = a.degree;
    profile.eckardt = a.eckardt;
    profile.tacnodal_section = a.tacnodal;
    profile.cuspidal_section = a.cuspidal;
    profile.on_minus_one_curve = a.on_minus_one;
    profile.on_special_dp7_curve = a.special_dp7;
    profile.tangent_zero_curve_pair = a.tangent_pair;
    if (!a.contact.empty()) profile.dp2_branch_contact = parse_contact(a.contact);
    profile.dp1_cuspidal_member = a.dp1_cuspidal;
    if (!a.dp8.empty()) profile.dp8_model = parse_dp8(a.dp8);
    AlphaResult r = alpha_at_point(profile, ProfileProvenance::declared);
    j["route"] = "declared-profile";
    t << "route: declared profile\n";
    alpha_common(j, t, profile, r);
    emit(a.json, j, t.str());
    return 0;
}

// ---- pair-check ----

struct PairCheckArgs {
    std::string divisor;
    std::string point;
    std::vector<std::string> adjunction;
    bool json = false;
};

int run_pair_check(const PairCheckArgs& a) {
    QDivisor d = parse_qdivisor(read_text_file(a.divisor));
    DegreeCheck deg = anticanonical_degree_check(d);
    std::vector<std::string> along = not_lc_along_curves(d);

    std::vector<PairRefutation> checks;
    checks.push_back(multiplicity_refute(d, a.point, true));
    for (const auto& label : a.adjunction) {
        size_t j = d.terms().size();
        for (size_t i = 0; i < d.terms().size(); ++i)
            if (d.terms()[i].curve.label() == label) j = i;
        if (j == d.terms().size())
            throw std::invalid_argument("pair-check: no component labeled \"" + label + "\"");
        checks.push_back(adjunction_refute(d, j, a.point));
    }
    bool refuted = false;
    for (const auto& c : checks) refuted = refuted || c.verdict == PairVerdict::refuted;

    ordered_json j;
    j["schema"] = 1;
    j["command"] = "pair-check";
    ordered_json comps = ordered_json::array();
    for (const auto& term : d.terms()) {
        ordered_json cj;
        cj["coeff"] = term.coeff.str();
        cj["label"] = term.curve.label();
        cj["class"] = term.curve.cls().str();
        comps.push_back(cj);
    }
    j["components"] = comps;
    j["class"] = d.cls().str();
    ordered_json dj;
    dj["pass"] = deg.pass;
    dj["value"] = deg.value.str();
    dj["expected"] = deg.expected;
    j["degree_check"] = dj;
    j["not_lc_along"] = along;
    j["claim"] = "the pair is not log canonical at " + a.point;
    j["point"] = a.point;
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json cj;
        cj["lemma"] = c.lemma;
        cj["verdict"] = c.verdict == PairVerdict::refuted ? "refuted" : "consistent";
        cj["value"] = c.value.str();
        cj["detail"] = c.detail;
        arr.push_back(cj);
    }
    j["checks"] = arr;
    j["refuted"] = refuted;

    std::ostringstream t;
    t << "divisor: " << d.terms().size() << " components on a lattice of rank "
      << d.lattice_rank() << " (degree " << deg.expected << ")\n";
    for (const auto& term : d.terms())
        t << "  " << term.coeff.str() << " * " << term.curve.label() << " with class "
          << term.curve.cls().str() << "\n";
    t << "class: " << d.cls().str() << "\n";
    t << "anticanonical degree check: " << (deg.pass ? "pass" : "FAIL") << " ((-K).D = "
      << deg.value.str() << ", lattice degree " << deg.expected << ")\n";
    t << "components with coefficient > 1:";
    if (along.empty()) t << " none";
    for (const auto& l : along) t << " " << l;
    t << "\n";
    t << "claim: the pair is not log canonical at " << a.point << "\n";
    for (const auto& c : checks) {
        t << "check [" << c.lemma << "]: "
          << (c.verdict == PairVerdict::refuted ? "REFUTED" : "consistent") << "\n";
        t << "  " << c.detail << "\n";
    }
    t << "result: " << (refuted ? "the claim is refuted" : "no check refutes the claim")
      << "\n";
    t << "citation: ";
    for (size_t i = 0; i < checks.size(); ++i) t << (i ? ", " : "") << checks[i].lemma;
    t << (refuted ? " (a refuted claim exits with code 1)" : "") << "\n";

    emit(a.json, j, t.str());
    return refuted ? 1 : 0;
}

// ---- descent ----

struct DescentArgs {
    std::string state;
    std::string oracle;
    long steps = 32;
    bool json = false;
};

int run_descent_cmd(const DescentArgs& a) {
    TriangleState initial = parse_descent_state(read_text_file(a.state));
    std::vector<Rational> oracle = parse_rational_lines(read_text_file(a.oracle));
    if (a.steps < 0) throw std::invalid_argument("descent run: --steps must be >= 0");
    DescentTrace trace = run_descent(initial, oracle, (size_t)a.steps);

    Rational floor = initial.omega.front().e;
    for (const auto& c : initial.omega)
        if (c.e < floor) floor = c.e;
    size_t steps_taken = trace.states.size() - 1;

    ordered_json j;
    j["schema"] = 1;
    j["command"] = "descent";
    j["max_steps"] = a.steps;
    j["oracle_values"] = (int)oracle.size();
    j["floor"] = floor.str();
    ordered_json states = ordered_json::array();
    for (const auto& s : trace.states) {
        ordered_json sj;
        sj["a"] = s.a.str();
        sj["b"] = s.b.str();
        sj["c"] = s.c.str();
        sj["m"] = s.m.str();
        ordered_json om = ordered_json::array();
        for (const auto& comp : s.omega) {
            ordered_json oj;
            oj["e"] = comp.e.str();
            oj["d"] = comp.d;
            om.push_back(oj);
        }
        sj["omega"] = om;
        sj["degree"] = s.omega_degree().str();
        states.push_back(sj);
    }
    j["states"] = states;
    ordered_json decs = ordered_json::array();
    for (const auto& d : trace.decrements) decs.push_back(d.str());
    j["decrements"] = decs;
    j["steps_taken"] = (int)steps_taken;
    j["terminal"] = terminal_name(trace.terminal);
    j["certificate"] = trace.certificate;

    std::ostringstream t;
    t << "discreteness floor: " << floor.str() << " (least initial component coefficient)\n";
    t << "step   a        b        c        m        residual degree   decrement\n";
    for (size_t i = 0; i < trace.states.size(); ++i) {
        const auto& s = trace.states[i];
        char line[160];
        std::snprintf(line, sizeof line, "%-6zu %-8s %-8s %-8s %-8s %-17s %s\n", i,
                      s.a.str().c_str(), s.b.str().c_str(), s.c.str().c_str(),
                      s.m.str().c_str(), s.omega_degree().str().c_str(),
                      i == 0 ? "-" : trace.decrements[i - 1].str().c_str());
        t << line;
    }
    t << "terminal: " << terminal_name(trace.terminal) << " after " << steps_taken
      << " step" << (steps_taken == 1 ? "" : "s") << "\n";
    if (!trace.certificate.empty()) t << "certificate: " << trace.certificate << "\n";
    t << "citation: each step strictly decreases the residual degree, and the degrees live "
         "in a discrete set bounded below by the floor\n";

    emit(a.json, j, t.str());
    return trace.terminal == DescentTerminal::contradiction ? 1 : 0;
}

// ---- verdict ----

struct VerdictArgs {
    int degree = 0;
    bool json = false;
};

int run_verdict(const VerdictArgs& a) {
    CylinderVerdict v = cylinder_verdict(a.degree);
    std::string statement = v.action_exists
                                ? "Ga-action on the affine cone (an anticanonical polar "
                                  "cylinder exists)"
                                : "no Ga-action on the affine cone (no anticanonical polar "
                                  "cylinder)";

    ordered_json j;
    j["schema"] = 1;
    j["command"] = "verdict";
    j["degree"] = v.degree;
    j["action_exists"] = v.action_exists;
    j["statement"] = statement;
    j["citation"] = v.citation;

    std::ostringstream t;
    t << "degree " << v.degree << " del Pezzo surface: " << statement << "\n";
    t << "citation: " << v.citation << "\n";

    emit(a.json, j, t.str());
    return 0;
}

// ---- fixtures ----

struct FixturesArgs {
    std::string dir = "fixtures";
    bool json = false;
};

int run_fixtures(const FixturesArgs& a) {
    std::vector<FixtureReport> reports = verify_all(a.dir);
    size_t passed = 0;
    for (const auto& r : reports) passed += r.pass ? 1 : 0;

    ordered_json j;
    j["schema"] = 1;
    j["command"] = "fixtures";
    j["directory"] = a.dir;
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json rj;
        rj["name"] = r.name;
        rj["kind"] = r.kind;
        rj["pass"] = r.pass;
        if (!r.error.empty()) rj["error"] = r.error;
        ordered_json checks = ordered_json::array();
        for (const auto& c : r.checks) {
            ordered_json cj;
            cj["key"] = c.key;
            cj["expected"] = c.expected;
            cj["actual"] = c.actual;
            cj["provenance"] = c.provenance;
            cj["pass"] = c.pass;
            checks.push_back(cj);
        }
        rj["checks"] = checks;
        arr.push_back(rj);
    }
    j["reports"] = arr;
    j["total"] = (int)reports.size();
    j["passed"] = (int)passed;

    std::ostringstream t;
    t << "fixtures directory: " << a.dir << "\n";
    for (const auto& r : reports) {
        if (!r.error.empty()) {
            t << "ERROR " << r.name << " (" << r.kind << "): " << r.error << "\n";
            continue;
        }
        t << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.kind << ")\n";
        for (const auto& c : r.checks) {
            if (c.pass) continue;
            t << "  " << c.key << ": expected \"" << c.expected << "\" [" << c.provenance
              << "], got \"" << c.actual << "\"\n";
        }
    }
    t << "summary: " << passed << "/" << reports.size() << " fixtures pass\n";

    emit(a.json, j, t.str());
    return passed == reports.size() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact geometry of del Pezzo surfaces: tangent sections, alpha values, "
                 "thresholds, refutation lemmas, degree descent"};
    app.require_subcommand(1);

    ClassifyArgs classify;
    auto* c_cmd = app.add_subcommand("classify",
                                     "classify the tangent section of a cubic surface at a "
                                     "point");
    c_cmd->add_option("--surface", classify.surface, "surface description file")->required();
    c_cmd->add_option("--point", classify.point, "projective point, e.g. \"1,-1,0,0\"")
        ->required();
    c_cmd->add_flag("--json", classify.json, "emit a schema-1 JSON document");

    AlphaArgs alpha;
    auto* a_cmd = app.add_subcommand("alpha", "alpha value at a point, by any route");
    a_cmd->add_option("--surface", alpha.surface, "cubic surface description file");
    a_cmd->add_option("--model", alpha.model, "plane blow-up model file (degree 4..8)");
    a_cmd->add_option("--quartic", alpha.quartic, "branch quartic description file (degree 2)");
    a_cmd->add_option("--point", alpha.point, "point coordinates");
    a_cmd->add_option("--base", alpha.base, "base point index for an infinitely-near point");
    a_cmd->add_option("--toward", alpha.toward, "direction point for --base");
    a_cmd->add_flag("--invariant", alpha.invariant,
                    "minimum over sampled points of a blow-up model");
    a_cmd->add_option("--sample", alpha.samples, "sample point for --invariant (repeatable)");
    auto* deg_opt = a_cmd->add_option("--degree", alpha.degree, "declared-profile degree 1..9");
    a_cmd->add_flag("--eckardt", alpha.eckardt, "declared profile: Eckardt point");
    a_cmd->add_flag("--tacnodal-section", alpha.tacnodal,
                    "declared profile: tacnodal tangent section");
    a_cmd->add_flag("--cuspidal-section", alpha.cuspidal,
                    "declared profile: cuspidal tangent section");
    a_cmd->add_flag("--on-minus-one-curve", alpha.on_minus_one,
                    "declared profile: the point lies on a (-1)-curve");
    a_cmd->add_flag("--special-dp7-curve", alpha.special_dp7,
                    "declared profile: on the special curve of a degree-7 surface");
    a_cmd->add_flag("--tangent-zero-curve-pair", alpha.tangent_pair,
                    "declared profile: both fibers of a zero-curve pair tangent");
    a_cmd->add_option("--contact", alpha.contact,
                      "declared profile: branch contact none|two|three|four_or_more");
    a_cmd->add_flag("--dp1-cuspidal-member", alpha.dp1_cuspidal,
                    "declared profile: cuspidal anticanonical member through the point");
    a_cmd->add_option("--dp8-model", alpha.dp8,
                      "declared profile: plane-blowup or quadric (degree 8)");
    a_cmd->add_flag("--json", alpha.json, "emit a schema-1 JSON document");

    LctArgs lct;
    auto* l_cmd = app.add_subcommand("lct",
                                     "log canonical threshold of a plane curve germ at the "
                                     "origin");
    l_cmd->add_option("--germ", lct.germ, "germ polynomial, e.g. \"y^2 - x^3\"")->required();
    l_cmd->add_option("--vars", lct.vars, "the two variable names, default \"x, y\"");
    l_cmd->add_option("--coeff", lct.coeff, "also report the threshold of coeff * germ");
    l_cmd->add_flag("--json", lct.json, "emit a schema-1 JSON document");

    LinesArgs lines;
    auto* li_cmd = app.add_subcommand("lines",
                                      "field-rational lines through a point of a cubic "
                                      "surface");
    li_cmd->add_option("--surface", lines.surface, "surface description file")->required();
    li_cmd->add_option("--point", lines.point, "projective point")->required();
    li_cmd->add_flag("--json", lines.json, "emit a schema-1 JSON document");

    PairCheckArgs pair;
    auto* p_cmd = app.add_subcommand("pair-check",
                                     "test a not-log-canonical claim against the refutation "
                                     "lemmas");
    p_cmd->add_option("--divisor", pair.divisor, "divisor component file")->required();
    p_cmd->add_option("--point", pair.point, "the point of the claim")->required();
    p_cmd->add_option("--adjunction", pair.adjunction,
                      "also run the adjunction inequality on this component (repeatable)");
    p_cmd->add_flag("--json", pair.json, "emit a schema-1 JSON document");

    DescentArgs descent;
    auto* d_cmd = app.add_subcommand("descent", "degree descent through the involution");
    d_cmd->require_subcommand(1);
    auto* dr_cmd = d_cmd->add_subcommand("run", "iterate from a state file");
    dr_cmd->add_option("--state", descent.state, "initial state file")->required();
    dr_cmd->add_option("--m-oracle", descent.oracle,
                       "file of multiplicities consumed one per step")
        ->required();
    dr_cmd->add_option("--steps", descent.steps, "step budget, default 32");
    dr_cmd->add_flag("--json", descent.json, "emit a schema-1 JSON document");

    VerdictArgs verdict;
    auto* v_cmd = app.add_subcommand("verdict",
                                     "polar cylinder verdict for a del Pezzo surface of the "
                                     "given degree");
    v_cmd->add_option("--degree", verdict.degree, "degree 1..9")->required();
    v_cmd->add_flag("--json", verdict.json, "emit a schema-1 JSON document");

    FixturesArgs fixtures;
    auto* f_cmd = app.add_subcommand("fixtures", "replay the pinned witness corpus");
    f_cmd->add_option("--dir", fixtures.dir, "fixtures directory, default \"fixtures\"");
    f_cmd->add_flag("--json", fixtures.json, "emit a schema-1 JSON document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        alpha.has_degree = deg_opt->count() > 0;
        if (c_cmd->parsed()) return run_classify(classify);
        if (a_cmd->parsed()) return run_alpha(alpha);
        if (l_cmd->parsed()) return run_lct(lct);
        if (li_cmd->parsed()) return run_lines(lines);
        if (p_cmd->parsed()) return run_pair_check(pair);
        if (d_cmd->parsed()) return run_descent_cmd(descent);
        if (v_cmd->parsed()) return run_verdict(verdict);
        if (f_cmd->parsed()) return run_fixtures(fixtures);
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
