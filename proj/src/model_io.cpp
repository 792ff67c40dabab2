#include "delpezzo/model_io.hpp"

#include "delpezzo/poly_parse.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace delpezzo {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// '#' starts a comment unless it sits inside a quoted string.
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

struct Line {
    int number;
    std::string text; // comment-stripped, trimmed, nonempty
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int n = 0;
    while (std::getline(in, raw)) {
        ++n;
        std::string t = trim(strip_comment(raw));
        if (!t.empty()) out.push_back({n, t});
    }
    return out;
}

// key = value lines; keys are bare words, values are kept raw.
std::map<std::string, std::pair<std::string, int>> read_keyed(const std::vector<Line>& lines,
                                                              const std::vector<std::string>& allowed) {
    std::map<std::string, std::pair<std::string, int>> out;
    for (const auto& line : lines) {
        size_t eq = line.text.find('=');
        if (eq == std::string::npos) fail(line.number, "expected key = value");
        std::string key = trim(line.text.substr(0, eq));
        std::string value = trim(line.text.substr(eq + 1));
        bool known = false;
        for (const auto& a : allowed) known = known || a == key;
        if (!known) fail(line.number, "unknown key '" + key + "'");
        if (out.count(key)) fail(line.number, "duplicate key '" + key + "'");
        if (value.empty()) fail(line.number, "empty value for '" + key + "'");
        out[key] = {value, line.number};
    }
    return out;
}

std::string unquote(const std::string& raw, int line) {
    if (raw.size() < 2 || raw.front() != '"' || raw.back() != '"')
        fail(line, "expected a quoted string, got " + raw);
    std::string inner = raw.substr(1, raw.size() - 2);
    if (inner.find('"') != std::string::npos) fail(line, "stray quote inside string");
    return inner;
}

std::vector<std::string> string_array(const std::string& raw, int line) {
    if (raw.size() < 2 || raw.front() != '[' || raw.back() != ']')
        fail(line, "expected [ \"...\", ... ], got " + raw);
    std::string inner = trim(raw.substr(1, raw.size() - 2));
    std::vector<std::string> out;
    if (inner.empty()) return out;
    size_t pos = 0;
    while (pos < inner.size()) {
        size_t open = inner.find('"', pos);
        if (open == std::string::npos) fail(line, "expected a quoted array entry");
        size_t close = inner.find('"', open + 1);
        if (close == std::string::npos) fail(line, "unterminated string in array");
        out.push_back(inner.substr(open + 1, close - open - 1));
        pos = close + 1;
        while (pos < inner.size() && (inner[pos] == ' ' || inner[pos] == '\t')) ++pos;
        if (pos < inner.size()) {
            if (inner[pos] != ',') fail(line, "expected ',' between array entries");
            ++pos;
        }
    }
    return out;
}

long parse_long(const std::string& s, int line) {
    std::string t = trim(s);
    try {
        size_t pos = 0;
        long v = std::stol(t, &pos);
        if (pos != t.size()) fail(line, "trailing characters after integer '" + t + "'");
        return v;
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception&) {
        fail(line, "expected an integer, got '" + t + "'");
    }
}

Rational parse_rational(const std::string& s, int line) {
    try {
        FieldElement v = parse_field_element(s, NumberField::rationals());
        return v.rational_value();
    } catch (const std::exception& e) {
        fail(line, std::string("bad rational '") + trim(s) + "': " + e.what());
    }
}

bool valid_identifier(const std::string& s) {
    if (s.empty() || !std::isalpha((unsigned char)s[0])) return false;
    for (char c : s)
        if (!std::isalnum((unsigned char)c) && c != '_') return false;
    return true;
}

std::string rational_list(const std::vector<Rational>& v, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].str();
    }
    return out;
}

} // namespace

SurfaceDescription parse_surface_description(const std::string& text) {
    auto kv = read_keyed(significant_lines(text), {"field", "generator", "variables", "form"});
    if (!kv.count("variables")) throw parse_error("surface description: missing 'variables'");
    if (!kv.count("form")) throw parse_error("surface description: missing 'form'");

    FieldPtr field;
    std::string gen = "t";
    if (kv.count("generator")) {
        if (!kv.count("field"))
            fail(kv["generator"].second, "'generator' given without a 'field' modulus");
        gen = unquote(kv["generator"].first, kv["generator"].second);
        if (!valid_identifier(gen)) fail(kv["generator"].second, "bad generator name '" + gen + "'");
    }
    if (kv.count("field")) {
        int line = kv["field"].second;
        std::string modulus_text = unquote(kv["field"].first, line);
        MultiPoly p = [&] {
            try {
                return parse_polynomial(modulus_text, NumberField::rationals(), {gen});
            } catch (const std::exception& e) {
                fail(line, std::string("bad field modulus: ") + e.what());
            }
        }();
        std::vector<Rational> coeffs;
        for (int k = 0; k <= p.total_degree(); ++k)
            coeffs.push_back(p.coeff({k}).rational_value());
        try {
            field = NumberField::create(RatPoly(std::move(coeffs)), gen);
        } catch (const std::exception& e) {
            fail(line, std::string("bad field modulus: ") + e.what());
        }
    } else {
        field = NumberField::rationals();
    }

    int vline = kv["variables"].second;
    std::vector<std::string> vars = string_array(kv["variables"].first, vline);
    if (vars.empty()) fail(vline, "'variables' must not be empty");
    for (size_t i = 0; i < vars.size(); ++i) {
        if (!valid_identifier(vars[i])) fail(vline, "bad variable name '" + vars[i] + "'");
        if (vars[i] == field->generator_name() && !field->is_rationals())
            fail(vline, "variable '" + vars[i] + "' shadows the field generator");
        for (size_t j = 0; j < i; ++j)
            if (vars[i] == vars[j]) fail(vline, "duplicate variable '" + vars[i] + "'");
    }

    int fline = kv["form"].second;
    std::string form_text = unquote(kv["form"].first, fline);
    try {
        MultiPoly form = parse_polynomial(form_text, field, vars);
        return SurfaceDescription{field, std::move(vars), std::move(form)};
    } catch (const parse_error& e) {
        fail(fline, std::string("bad form: ") + e.what());
    }
}

std::string serialize_surface_description(const SurfaceDescription& d) {
    std::string out;
    if (!d.field->is_rationals()) {
        out += "field = \"" + d.field->modulus().str(d.field->generator_name()) + "\"\n";
        out += "generator = \"" + d.field->generator_name() + "\"\n";
    }
    out += "variables = [";
    for (size_t i = 0; i < d.variables.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + d.variables[i] + "\"";
    }
    out += "]\n";
    out += "form = \"" + d.form.str(d.variables) + "\"\n";
    return out;
}

PlanePoint parse_plane_point_text(const std::string& text) {
    int separators = 0;
    for (char c : text)
        if (c == ',' || c == ':') ++separators;
    if (separators != 1 && separators != 2)
        throw parse_error("point '" + text + "' needs 2 affine or 3 projective coordinates");
    std::vector<FieldElement> coords = parse_point(text, NumberField::rationals(), separators + 1);
    if (coords.size() == 2)
        return PlanePoint(coords[0].rational_value(), coords[1].rational_value());
    return PlanePoint(coords[0].rational_value(), coords[1].rational_value(),
                      coords[2].rational_value());
}

std::string plane_point_text(const PlanePoint& p) {
    if (p.z.is_one()) return p.x.str() + ", " + p.y.str();
    return p.x.str() + " : " + p.y.str() + " : " + p.z.str();
}

namespace {

PlanePoint parse_plane_point(const std::string& text, int line) {
    try {
        return parse_plane_point_text(text);
    } catch (const std::exception& e) {
        fail(line, std::string("bad point: ") + e.what());
    }
}

} // namespace

BlowupModel parse_blowup_model(const std::string& text) {
    auto kv = read_keyed(significant_lines(text), {"degree", "points"});
    if (!kv.count("degree")) throw parse_error("blow-up model: missing 'degree'");
    if (!kv.count("points")) throw parse_error("blow-up model: missing 'points'");
    long degree = parse_long(kv["degree"].first, kv["degree"].second);
    int pline = kv["points"].second;
    std::vector<PlanePoint> pts;
    for (const auto& entry : string_array(kv["points"].first, pline))
        pts.push_back(parse_plane_point(entry, pline));
    return BlowupModel((int)degree, pts);
}

std::string serialize_blowup_model(const BlowupModel& m) {
    std::string out = "degree = " + std::to_string(m.degree()) + "\n";
    out += "points = [";
    const auto& pts = m.base_points();
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + plane_point_text(pts[i]) + "\"";
    }
    out += "]\n";
    return out;
}

TriangleState parse_descent_state(const std::string& text) {
    TriangleState s;
    std::map<std::string, bool> seen = {{"a", false}, {"b", false}, {"c", false}, {"m", false}};
    for (const auto& line : significant_lines(text)) {
        size_t eq = line.text.find('=');
        if (eq != std::string::npos) {
            std::string key = trim(line.text.substr(0, eq));
            if (!seen.count(key)) fail(line.number, "unknown scalar '" + key + "'");
            if (seen[key]) fail(line.number, "duplicate scalar '" + key + "'");
            Rational v = parse_rational(line.text.substr(eq + 1), line.number);
            seen[key] = true;
            if (key == "a") s.a = v;
            else if (key == "b") s.b = v;
            else if (key == "c") s.c = v;
            else s.m = v;
            continue;
        }
        std::istringstream parts(line.text);
        std::string e_text, d_text, extra;
        parts >> e_text >> d_text;
        if (d_text.empty() || (parts >> extra))
            fail(line.number, "component lines carry exactly 'e d'");
        OmegaComponent comp;
        comp.e = parse_rational(e_text, line.number);
        comp.d = parse_long(d_text, line.number);
        s.omega.push_back(comp);
    }
    for (const auto& [key, present] : seen)
        if (!present) throw parse_error("descent state: missing scalar '" + key + "'");
    return s;
}

std::string serialize_descent_state(const TriangleState& s) {
    std::string out;
    out += "a = " + s.a.str() + "\n";
    out += "b = " + s.b.str() + "\n";
    out += "c = " + s.c.str() + "\n";
    out += "m = " + s.m.str() + "\n";
    for (const auto& comp : s.omega) out += comp.e.str() + " " + std::to_string(comp.d) + "\n";
    return out;
}

std::vector<Rational> parse_rational_lines(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& line : significant_lines(text)) out.push_back(parse_rational(line.text, line.number));
    return out;
}

std::string serialize_rational_lines(const std::vector<Rational>& values) {
    std::string out;
    for (const auto& v : values) out += v.str() + "\n";
    return out;
}

namespace {

// Splits on ';' outside parentheses, so class tuples stay whole.
std::vector<std::string> split_clauses(const std::string& text, int line) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(') ++depth;
        else if (c == ')') {
            --depth;
            if (depth < 0) fail(line, "unbalanced ')'");
        }
        if (c == ';' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) fail(line, "unbalanced '('");
    out.push_back(trim(cur));
    return out;
}

DivisorClass parse_class_tuple(const std::string& text, int line) {
    std::string t = trim(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        fail(line, "class tuple must look like (a; b1, ..., bk)");
    std::string inner = t.substr(1, t.size() - 2);
    size_t semi = inner.find(';');
    if (semi == std::string::npos) fail(line, "class tuple needs ';' after the first entry");
    std::vector<Rational> coords;
    coords.push_back(parse_rational(inner.substr(0, semi), line));
    std::string rest = inner.substr(semi + 1);
    std::string cur;
    for (char c : rest) {
        if (c == ',') {
            coords.push_back(parse_rational(cur, line));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty()) coords.push_back(parse_rational(cur, line));
    return DivisorClass(coords);
}

// point label: bare word up to a delimiter
std::string take_label(const std::string& text, int line) {
    std::string t = trim(text);
    if (t.empty()) fail(line, "empty label");
    for (char c : t)
        if (std::isspace((unsigned char)c) || c == ';' || c == ':' || c == '(' || c == ')')
            fail(line, "bad label '" + t + "'");
    return t;
}

} // namespace

QDivisor parse_qdivisor(const std::string& text) {
    std::vector<QTerm> terms;
    size_t rank = 0;
    for (const auto& line : significant_lines(text)) {
        size_t star = line.text.find('*');
        if (star == std::string::npos) fail(line.number, "expected 'coeff * label : ...'");
        Rational coeff = parse_rational(line.text.substr(0, star), line.number);
        size_t colon = line.text.find(':', star);
        if (colon == std::string::npos) fail(line.number, "missing ':' after the label");
        std::string label = take_label(line.text.substr(star + 1, colon - star - 1), line.number);

        auto clauses = split_clauses(line.text.substr(colon + 1), line.number);
        if (clauses.empty() || clauses[0].rfind("class=", 0) != 0)
            fail(line.number, "first clause must be class=(a; b1, ..., bk)");
        DivisorClass cls = parse_class_tuple(clauses[0].substr(6), line.number);
        if (rank == 0) rank = cls.coords().size();
        else if (cls.coords().size() != rank)
            fail(line.number, "class rank differs from earlier components");

        SymbolicCurve curve(label, cls);
        for (size_t i = 1; i < clauses.size(); ++i) {
            const std::string& cl = clauses[i];
            if (cl.rfind("mult@", 0) == 0) {
                size_t eq = cl.find('=');
                if (eq == std::string::npos) fail(line.number, "mult@ clause needs '='");
                std::string point = take_label(cl.substr(5, eq - 5), line.number);
                curve.declare_multiplicity(point, parse_long(cl.substr(eq + 1), line.number));
            } else if (cl.rfind("int@", 0) == 0) {
                size_t open = cl.find('(');
                size_t close = cl.find(')', open == std::string::npos ? 0 : open);
                size_t eq = cl.find('=', close == std::string::npos ? 0 : close);
                if (open == std::string::npos || close == std::string::npos ||
                    eq == std::string::npos)
                    fail(line.number, "int@ clause must look like int@P(other)=m");
                std::string point = take_label(cl.substr(4, open - 4), line.number);
                std::string other = take_label(cl.substr(open + 1, close - open - 1), line.number);
                curve.declare_intersection(other, point, parse_long(cl.substr(eq + 1), line.number));
            } else if (cl.rfind("smooth@", 0) == 0) {
                curve.declare_smooth(take_label(cl.substr(7), line.number));
            } else {
                fail(line.number, "unknown clause '" + cl + "'");
            }
        }
        terms.push_back(QTerm{coeff, std::move(curve)});
    }
    if (terms.empty()) throw parse_error("divisor file has no components");
    return QDivisor(std::move(terms), rank);
}

std::string serialize_qdivisor(const QDivisor& d) {
    std::string out;
    for (const auto& term : d.terms()) {
        out += term.coeff.str() + " * " + term.curve.label() + " : class=" + term.curve.cls().str();
        for (const auto& [point, m] : term.curve.multiplicities())
            out += " ; mult@" + point + "=" + std::to_string(m);
        for (const auto& [key, m] : term.curve.intersections())
            out += " ; int@" + key.second + "(" + key.first + ")=" + std::to_string(m);
        for (const auto& point : term.curve.smooth_points()) out += " ; smooth@" + point;
        out += "\n";
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

} // namespace delpezzo
