#include "delpezzo/fixtures.hpp"

#include "delpezzo/germ.hpp"
#include "delpezzo/model_io.hpp"
#include "delpezzo/picard.hpp"
#include "delpezzo/poly_parse.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

namespace delpezzo {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        else if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw parse_error("line " + std::to_string(line) + ": " + msg);
}

std::string unquote(const std::string& raw, int line) {
    if (raw.size() < 2 || raw.front() != '"' || raw.back() != '"')
        fail(line, "expected a quoted string, got " + raw);
    std::string inner = raw.substr(1, raw.size() - 2);
    if (inner.find('"') != std::string::npos) fail(line, "stray quote inside string");
    return inner;
}

bool tagged_provenance(const std::string& tag) {
    if (tag == "table" || tag == "direct") return true;
    return tag.rfind("oracle:", 0) == 0 && tag.size() > 7;
}

std::string bool_name(bool b) { return b ? "true" : "false"; }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

} // namespace

FixtureRecord parse_fixture(const std::string& text, const std::string& directory) {
    FixtureRecord rec;
    rec.directory = directory;
    std::istringstream in(text);
    std::string raw;
    int n = 0;
    while (std::getline(in, raw)) {
        ++n;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;

        if (line.rfind("expect ", 0) == 0) {
            std::string body = trim(line.substr(7));
            size_t eq = body.find('=');
            if (eq == std::string::npos) fail(n, "expectation needs key = \"value\" @ tag");
            std::string key = trim(body.substr(0, eq));
            std::string rest = trim(body.substr(eq + 1));
            size_t at = rest.rfind('@');
            if (at == std::string::npos)
                fail(n, "untagged expectation '" + key + "': every expected value names its "
                        "provenance (table, direct, or oracle:<name>)");
            std::string value = unquote(trim(rest.substr(0, at)), n);
            std::string tag = trim(rest.substr(at + 1));
            if (!tagged_provenance(tag))
                fail(n, "bad provenance '" + tag + "': use table, direct, or oracle:<name>");
            if (key.empty()) fail(n, "expectation with empty key");
            rec.expectations.push_back(Expectation{key, value, tag, n});
            continue;
        }

        size_t eq = line.find('=');
        if (eq == std::string::npos) fail(n, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) fail(n, "expected key = value");
        if (value.front() == '"') value = unquote(value, n);
        if (key == "name") {
            if (!rec.name.empty()) fail(n, "duplicate name");
            rec.name = value;
        } else if (key == "kind") {
            if (!rec.kind.empty()) fail(n, "duplicate kind");
            rec.kind = value;
        } else {
            if (rec.payload.count(key)) fail(n, "duplicate key '" + key + "'");
            rec.payload[key] = value;
        }
    }
    if (rec.name.empty()) throw parse_error("fixture without a name");
    if (rec.kind.empty()) throw parse_error("fixture '" + rec.name + "' without a kind");
    if (rec.expectations.empty())
        throw parse_error("fixture '" + rec.name + "' has no expectations");
    return rec;
}

FixtureRecord load_fixture(const std::string& path) {
    return parse_fixture(read_text_file(path),
                         std::filesystem::path(path).parent_path().string());
}

namespace {

using Results = std::map<std::string, std::string>;

const std::string& need(const FixtureRecord& rec, const std::string& key) {
    auto it = rec.payload.find(key);
    if (it == rec.payload.end())
        throw std::invalid_argument("fixture '" + rec.name + "' (" + rec.kind +
                                    ") is missing payload key '" + key + "'");
    return it->second;
}

std::string resolve(const FixtureRecord& rec, const std::string& relative) {
    if (rec.directory.empty()) return relative;
    return (std::filesystem::path(rec.directory) / relative).string();
}

long payload_long(const FixtureRecord& rec, const std::string& key) {
    const std::string& s = need(rec, key);
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("payload '" + key + "' is not an integer");
    return v;
}

Results run_cubic_point(const FixtureRecord& rec) {
    SurfaceDescription desc =
        parse_surface_description(read_text_file(resolve(rec, need(rec, "surface"))));
    CubicSurface surface(desc.form);
    SurfacePoint p = surface.point(need(rec, "point"));
    TangentSectionReport report = tangent_section(surface, p);
    AlphaResult alpha = alpha_at_cubic_point(surface, p);
    PointProfile profile = cubic_point_profile(report);

    Results r;
    r["case"] = tangent_case_name(report.tangent_case);
    r["germ"] = germ_type_name(report.local_type.type);
    r["multiplicity"] = std::to_string(report.germ_poly.order());
    r["lct"] = report.lct_at_point.str();
    r["alpha"] = alpha.value.str();
    r["eckardt"] = bool_name(is_eckardt(surface, p));
    r["lines"] = std::to_string(lines_through_point(surface, p).size());
    r["row"] = alpha_row_id(profile);
    return r;
}

Results run_model_point(const FixtureRecord& rec) {
    BlowupModel model = parse_blowup_model(read_text_file(resolve(rec, need(rec, "model"))));
    PointProfile profile;
    if (rec.payload.count("base") || rec.payload.count("toward")) {
        size_t base = (size_t)payload_long(rec, "base");
        PlanePoint toward = parse_plane_point_text(need(rec, "toward"));
        profile = model_point_profile(model, base, toward);
    } else {
        profile = model_point_profile(model, parse_plane_point_text(need(rec, "point")));
    }
    AlphaResult alpha = alpha_at_point(profile, ProfileProvenance::computed);

    Results r;
    r["alpha"] = alpha.value.str();
    r["row"] = alpha_row_id(profile);
    r["on_minus_one_curve"] = bool_name(profile.on_minus_one_curve);
    r["special"] = bool_name(profile.on_special_dp7_curve);
    r["tangent_pair"] = bool_name(profile.tangent_zero_curve_pair);
    return r;
}

Results run_model_invariant(const FixtureRecord& rec) {
    BlowupModel model = parse_blowup_model(read_text_file(resolve(rec, need(rec, "model"))));
    std::vector<PlanePoint> samples;
    if (rec.payload.count("samples")) {
        for (const auto& part : split(rec.payload.at("samples"), '|'))
            samples.push_back(parse_plane_point_text(part));
    }
    AlphaBound bound = alpha_invariant(model, samples);
    Results r;
    r["alpha"] = bound.value.str();
    r["exact"] = bool_name(bound.exact);
    return r;
}

Results run_dp2_point(const FixtureRecord& rec) {
    SurfaceDescription desc =
        parse_surface_description(read_text_file(resolve(rec, need(rec, "quartic"))));
    Dp2BranchModel model(desc.form);
    std::vector<FieldElement> p = parse_point(need(rec, "point"), desc.field, 3);
    PointProfile profile = dp2_point_profile(model, p);
    AlphaResult alpha = alpha_at_point(profile, ProfileProvenance::computed);
    Results r;
    r["contact"] = dp2_contact_name(profile.dp2_branch_contact);
    r["alpha"] = alpha.value.str();
    r["row"] = alpha_row_id(profile);
    return r;
}

Results run_profile(const FixtureRecord& rec) {
    PointProfile p;
    p.degree = (int)payload_long(rec, "degree");
    if (rec.payload.count("flags")) {
        for (const auto& flag : split(rec.payload.at("flags"), ',')) {
            if (flag == "eckardt") p.eckardt = true;
            else if (flag == "tacnodal_section") p.tacnodal_section = true;
            else if (flag == "cuspidal_section") p.cuspidal_section = true;
            else if (flag == "on_minus_one_curve") p.on_minus_one_curve = true;
            else if (flag == "on_special_dp7_curve") p.on_special_dp7_curve = true;
            else if (flag == "tangent_zero_curve_pair") p.tangent_zero_curve_pair = true;
            else if (flag == "dp1_cuspidal_member") p.dp1_cuspidal_member = true;
            else throw std::invalid_argument("unknown profile flag '" + flag + "'");
        }
    }
    if (rec.payload.count("dp8_model")) {
        const std::string& m = rec.payload.at("dp8_model");
        if (m == "plane") p.dp8_model = Dp8Model::blowup_of_plane;
        else if (m == "quadric") p.dp8_model = Dp8Model::quadric;
        else throw std::invalid_argument("dp8_model must be plane or quadric, got '" + m + "'");
    }
    if (rec.payload.count("contact")) {
        const std::string& c = rec.payload.at("contact");
        if (c == "none") p.dp2_branch_contact = Dp2Contact::none;
        else if (c == "two") p.dp2_branch_contact = Dp2Contact::two;
        else if (c == "three") p.dp2_branch_contact = Dp2Contact::three;
        else if (c == "four_or_more") p.dp2_branch_contact = Dp2Contact::four_or_more;
        else throw std::invalid_argument("unknown contact '" + c + "'");
    }
    AlphaResult alpha = alpha_at_point(p);
    Results r;
    r["alpha"] = alpha.value.str();
    r["row"] = alpha_row_id(p);
    return r;
}

Results run_germ(const FixtureRecord& rec) {
    MultiPoly poly =
        parse_polynomial(need(rec, "germ"), NumberField::rationals(), {"x", "y"});
    PlaneCurveGerm germ(poly);
    GermClassification cls = classify_germ(germ);
    LctCertificate cert = lct_via_blowups(germ);
    Results r;
    r["type"] = germ_type_name(cls.type);
    r["multiplicity"] = std::to_string(germ.multiplicity());
    r["lct"] = cert.lct.str();
    r["blowups"] = std::to_string(cert.blowups.size());
    return r;
}

Results run_descent_fixture(const FixtureRecord& rec) {
    TriangleState state = parse_descent_state(read_text_file(resolve(rec, need(rec, "state"))));
    StateCheck check = validate_state(state);
    Results r;
    r["valid"] = bool_name(check.pass);
    if (!check.pass) {
        std::string joined;
        for (const auto& v : check.violations) joined += (joined.empty() ? "" : " | ") + v;
        r["violations"] = joined;
        return r;
    }
    std::vector<Rational> oracle;
    if (rec.payload.count("oracle"))
        oracle = parse_rational_lines(read_text_file(resolve(rec, rec.payload.at("oracle"))));
    size_t steps = 32;
    if (rec.payload.count("steps")) steps = (size_t)payload_long(rec, "steps");

    Rational floor = state.omega.at(0).e;
    for (const auto& comp : state.omega) floor = std::min(floor, comp.e);
    DescentTrace trace = run_descent(state, oracle, steps);
    r["terminal"] = terminal_name(trace.terminal);
    r["steps"] = std::to_string(trace.decrements.size());
    r["floor"] = floor.str();
    r["last_degree"] = trace.states.back().omega_degree().str();
    return r;
}

Results run_divisor(const FixtureRecord& rec) {
    QDivisor d = parse_qdivisor(read_text_file(resolve(rec, need(rec, "divisor"))));
    DegreeCheck check = anticanonical_degree_check(d);
    DivisorClass anti = anticanonical_class(d.num_exceptional());
    Results r;
    r["class"] = d.cls().str();
    r["anticanonical"] = bool_name(d.cls() == anti);
    r["degree_check"] = check.pass ? "pass" : "fail";
    r["pairing"] = check.value.str();
    auto bad = not_lc_along_curves(d);
    std::string joined;
    for (const auto& label : bad) joined += (joined.empty() ? "" : ", ") + label;
    r["not_lc_along"] = bad.empty() ? "none" : joined;
    return r;
}

Results run_verdict(const FixtureRecord& rec) {
    CylinderVerdict v = cylinder_verdict((int)payload_long(rec, "degree"));
    Results r;
    r["action"] = v.action_exists ? "yes" : "no";
    r["citation"] = v.citation;
    return r;
}

Results run_counts(const FixtureRecord& rec) {
    long degree = payload_long(rec, "degree");
    if (degree < 1 || degree > 8)
        throw std::invalid_argument("counts fixture: degree must be 1..8");
    size_t r_exc = (size_t)(9 - degree);
    Results r;
    r["minus_one"] = std::to_string(minus_one_classes(r_exc).size());
    if (degree == 4) r["zero_pairs"] = std::to_string(zero_curve_pairs(r_exc).size());
    return r;
}

Results run_cubic_scan(const FixtureRecord& rec) {
    SurfaceDescription desc =
        parse_surface_description(read_text_file(resolve(rec, need(rec, "surface"))));
    CubicSurface surface(desc.form);
    long height = payload_long(rec, "height");

    std::set<std::string> cases;
    std::set<Rational> alphas;
    auto points = scan_cubic_points(surface, height);
    for (const auto& p : points) {
        TangentSectionReport report = tangent_section(surface, p);
        cases.insert(tangent_case_name(report.tangent_case));
        alphas.insert(alpha_at_cubic_point(surface, p).value);
    }

    Results r;
    r["points"] = std::to_string(points.size());
    std::string case_list;
    for (const auto& c : cases) case_list += (case_list.empty() ? "" : ", ") + c;
    r["seen_cases"] = case_list;
    std::string alpha_list;
    for (const auto& a : alphas) alpha_list += (alpha_list.empty() ? "" : ", ") + a.str();
    r["seen_alphas"] = alpha_list;
    return r;
}

} // namespace

FixtureReport run_fixture(const FixtureRecord& rec) {
    FixtureReport report;
    report.name = rec.name;
    report.kind = rec.kind;
    report.pass = true;
    try {
        if (rec.kind == "cubic-point") report.results = run_cubic_point(rec);
        else if (rec.kind == "model-point") report.results = run_model_point(rec);
        else if (rec.kind == "model-invariant") report.results = run_model_invariant(rec);
        else if (rec.kind == "dp2-point") report.results = run_dp2_point(rec);
        else if (rec.kind == "profile") report.results = run_profile(rec);
        else if (rec.kind == "germ") report.results = run_germ(rec);
        else if (rec.kind == "descent") report.results = run_descent_fixture(rec);
        else if (rec.kind == "divisor") report.results = run_divisor(rec);
        else if (rec.kind == "verdict") report.results = run_verdict(rec);
        else if (rec.kind == "counts") report.results = run_counts(rec);
        else if (rec.kind == "cubic-scan") report.results = run_cubic_scan(rec);
        else throw std::invalid_argument("unknown fixture kind '" + rec.kind + "'");
    } catch (const std::exception& e) {
        report.error = e.what();
        report.pass = false;
        return report;
    }

    for (const auto& exp : rec.expectations) {
        CheckResult check;
        check.key = exp.key;
        check.expected = exp.value;
        check.provenance = exp.provenance;
        auto it = report.results.find(exp.key);
        check.actual = it == report.results.end() ? "(no such result)" : it->second;
        check.pass = check.actual == check.expected;
        report.pass = report.pass && check.pass;
        report.checks.push_back(check);
    }
    return report;
}

std::vector<FixtureReport> verify_all(const std::string& fixtures_dir) {
    std::vector<std::filesystem::path> paths;
    for (const auto& entry : std::filesystem::directory_iterator(fixtures_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".fixture")
            paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());

    std::vector<FixtureReport> reports;
    for (const auto& path : paths) {
        try {
            reports.push_back(run_fixture(load_fixture(path.string())));
        } catch (const std::exception& e) {
            FixtureReport broken;
            broken.name = path.filename().string();
            broken.error = e.what();
            broken.pass = false;
            reports.push_back(broken);
        }
    }
    return reports;
}

} // namespace delpezzo
