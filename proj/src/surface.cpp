#include "delpezzo/surface.hpp"

#include "delpezzo/poly_parse.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace delpezzo {

namespace {

using FVec = std::vector<FieldElement>;

FieldElement dot(const FVec& a, const FVec& b) {
    FieldElement s = a.at(0).field()->zero();
    for (size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
    return s;
}

bool all_zero(const FVec& v) {
    return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

// Incremental rank tracking by reduction against stored pivot rows.
struct RankTracker {
    std::vector<std::pair<size_t, FVec>> rows; // (pivot index, normalized row)

    bool add(FVec v) {
        for (const auto& [piv, row] : rows) {
            if (!v[piv].is_zero()) {
                FieldElement c = v[piv];
                for (size_t i = 0; i < v.size(); ++i) v[i] = v[i] - c * row[i];
            }
        }
        for (size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_zero()) {
                FieldElement inv = v[i].inverse();
                for (auto& x : v) x = x * inv;
                rows.push_back({i, v});
                return true;
            }
        }
        return false;
    }
};

// Two vectors spanning, together with p, the kernel of the linear form g.
std::pair<FVec, FVec> complete_frame(const FVec& g, const FVec& p) {
    const FieldPtr& f = p[0].field();
    size_t pivot = 0;
    while (pivot < g.size() && g[pivot].is_zero()) ++pivot;
    if (pivot == g.size()) throw std::logic_error("complete_frame: zero form");

    RankTracker rank;
    rank.add(p);
    std::vector<FVec> picked;
    for (size_t i = 0; i < g.size() && picked.size() < 2; ++i) {
        if (i == pivot) continue;
        FVec b(g.size(), f->zero());
        b[i] = f->one();
        b[pivot] = -(g[i] / g[pivot]);
        if (rank.add(b)) picked.push_back(b);
    }
    if (picked.size() != 2) throw std::logic_error("complete_frame: kernel completion failed");
    return {picked[0], picked[1]};
}

// One particular solution of (rows) * x = rhs; free coordinates are set to 0.
FVec solve_particular(std::vector<FVec> rows, FVec rhs, const FieldPtr& f) {
    size_t n = rows.empty() ? 0 : rows[0].size();
    for (size_t i = 0; i < rows.size(); ++i) rows[i].push_back(rhs[i]);

    std::vector<std::pair<size_t, size_t>> pivots; // (row, column)
    size_t r = 0;
    for (size_t col = 0; col < n && r < rows.size(); ++col) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        FieldElement inv = rows[r][col].inverse();
        for (auto& x : rows[r]) x = x * inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            FieldElement c = rows[i][col];
            for (size_t j = 0; j <= n; ++j) rows[i][j] = rows[i][j] - c * rows[r][j];
        }
        pivots.push_back({r, col});
        ++r;
    }
    for (size_t i = r; i < rows.size(); ++i)
        if (!rows[i][n].is_zero()) throw std::logic_error("solve_particular: inconsistent system");

    FVec x(n, f->zero());
    for (const auto& [row, col] : pivots) x[col] = rows[row][n];
    return x;
}

// Order of vanishing of the ternary form along the line from p toward w, at p.
int order_along_line(const MultiPoly& form, const FVec& p, const FVec& w) {
    const FieldPtr& f = form.field();
    MultiPoly t = MultiPoly::variable(f, 1, 0);
    std::vector<MultiPoly> images;
    for (size_t i = 0; i < p.size(); ++i)
        images.push_back(MultiPoly::constant(f, 1, p[i]) + t.scaled(w[i]));
    MultiPoly phi = form.substitute(images);
    if (phi.is_zero()) return -1; // the whole line lies on the form
    return phi.order();
}

// A direction on the line cut out by the 3-variable form lam, independent of p.
FVec second_point_on_line(const FVec& lam, const FVec& p) {
    const FieldPtr& f = p[0].field();
    size_t pivot = 0;
    while (pivot < 3 && lam[pivot].is_zero()) ++pivot;
    if (pivot == 3) throw std::logic_error("second_point_on_line: zero form");
    RankTracker rank;
    rank.add(p);
    for (size_t i = 0; i < 3; ++i) {
        if (i == pivot) continue;
        FVec b(3, f->zero());
        b[i] = f->one();
        b[pivot] = -(lam[i] / lam[pivot]);
        if (rank.add(b)) return b;
    }
    throw std::logic_error("second_point_on_line: no independent direction");
}

FieldElement det2(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                  const FieldElement& d) {
    return a * d - b * c;
}

// Symmetric matrix of a ternary quadratic form q = sum q_ij x_i x_j.
std::vector<FVec> conic_matrix(const MultiPoly& q) {
    const FieldPtr& f = q.field();
    FieldElement half = f->from_rational(Rational(1, 2));
    std::vector<FVec> a(3, FVec(3, f->zero()));
    for (int i = 0; i < 3; ++i) {
        std::vector<int> e(3, 0);
        e[i] = 2;
        a[i][i] = q.coeff(e);
    }
    auto mixed = [&](int i, int j) {
        std::vector<int> e(3, 0);
        e[i] = 1;
        e[j] = 1;
        return q.coeff(e) * half;
    };
    a[0][1] = a[1][0] = mixed(0, 1);
    a[0][2] = a[2][0] = mixed(0, 2);
    a[1][2] = a[2][1] = mixed(1, 2);
    return a;
}

FieldElement det3_field(const std::vector<FVec>& a) {
    return a[0][0] * det2(a[1][1], a[1][2], a[2][1], a[2][2]) -
           a[0][1] * det2(a[1][0], a[1][2], a[2][0], a[2][2]) +
           a[0][2] * det2(a[1][0], a[1][1], a[2][0], a[2][1]);
}

bool matrix_rank_at_most_one(const std::vector<FVec>& a) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = i + 1; k < 3; ++k)
                for (int l = j + 1; l < 3; ++l)
                    if (!det2(a[i][j], a[i][l], a[k][j], a[k][l]).is_zero()) return false;
    return true;
}

// ---- rational geometry in the plane of a blow-up model ----

using RVec3 = std::array<Rational, 3>;

RVec3 as_vec(const PlanePoint& p) { return {p.x, p.y, p.z}; }

Rational rdot3(const RVec3& a, const RVec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

RVec3 cross(const RVec3& a, const RVec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool collinear(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
    return rdot3(cross(as_vec(a), as_vec(b)), as_vec(c)).is_zero();
}

using Conic = std::array<Rational, 6>; // x^2, xy, y^2, xz, yz, z^2

std::array<Rational, 6> conic_row(const PlanePoint& p) {
    return {p.x * p.x, p.x * p.y, p.y * p.y, p.x * p.z, p.y * p.z, p.z * p.z};
}

// The unique conic through five points; the caller guarantees the conditions
// are independent, which is re-checked here.
Conic conic_through(const std::vector<PlanePoint>& pts) {
    if (pts.size() != 5) throw std::logic_error("conic_through: needs five points");
    std::vector<std::array<Rational, 7>> m(5);
    for (size_t i = 0; i < 5; ++i) {
        auto row = conic_row(pts[i]);
        std::copy(row.begin(), row.end(), m[i].begin());
        m[i][6] = Rational(0);
    }
    size_t r = 0;
    std::vector<size_t> pivot_cols;
    for (size_t col = 0; col < 6 && r < 5; ++col) {
        size_t sel = r;
        while (sel < 5 && m[sel][col].is_zero()) ++sel;
        if (sel == 5) continue;
        std::swap(m[r], m[sel]);
        Rational inv = Rational(1) / m[r][col];
        for (auto& x : m[r]) x *= inv;
        for (size_t i = 0; i < 5; ++i) {
            if (i == r || m[i][col].is_zero()) continue;
            Rational c = m[i][col];
            for (size_t j = 0; j < 7; ++j) m[i][j] -= c * m[r][j];
        }
        pivot_cols.push_back(col);
        ++r;
    }
    if (r != 5)
        throw std::logic_error("conic_through: the five points impose dependent conditions");
    size_t free_col = 0;
    while (std::find(pivot_cols.begin(), pivot_cols.end(), free_col) != pivot_cols.end())
        ++free_col;
    Conic c{};
    c[free_col] = Rational(1);
    for (size_t i = 0; i < 5; ++i) c[pivot_cols[i]] = -m[i][free_col];
    return c;
}

Rational conic_eval(const Conic& c, const PlanePoint& p) {
    auto row = conic_row(p);
    Rational s(0);
    for (size_t i = 0; i < 6; ++i) s += c[i] * row[i];
    return s;
}

// Gradient of the conic at p: the coefficients of its tangent line there.
RVec3 conic_gradient(const Conic& c, const PlanePoint& p) {
    return {Rational(2) * c[0] * p.x + c[1] * p.y + c[3] * p.z,
            c[1] * p.x + Rational(2) * c[2] * p.y + c[4] * p.z,
            c[3] * p.x + c[4] * p.y + Rational(2) * c[5] * p.z};
}

bool rvec_zero(const RVec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

} // namespace

// ---- cubic surfaces ----

std::string SurfacePoint::str() const {
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += " : ";
        s += coords[i].str();
    }
    return s + ")";
}

CubicSurface::CubicSurface(MultiPoly form) : form_(std::move(form)) {
    if (form_.nvars() != 4) throw std::invalid_argument("cubic surface: the form needs 4 variables");
    if (form_.is_zero() || !form_.is_homogeneous() || form_.total_degree() != 3)
        throw std::invalid_argument("cubic surface: the form must be homogeneous of degree 3");
    if (has_linear_factor_quaternary(form_))
        throw std::invalid_argument(
            "cubic surface: the form has a linear factor over the field, so the "
            "surface contains a plane and is not smooth");
}

bool CubicSurface::contains(const FVec& coords) const {
    return form_.evaluate(coords).is_zero();
}

FVec CubicSurface::gradient(const FVec& coords) const {
    FVec g;
    for (int i = 0; i < 4; ++i) g.push_back(form_.partial(i).evaluate(coords));
    return g;
}

SurfacePoint CubicSurface::point(FVec coords) const {
    if (coords.size() != 4)
        throw std::invalid_argument("surface point: needs 4 projective coordinates");
    for (const auto& c : coords) require_same_field(c, field()->zero());
    if (all_zero(coords)) throw std::invalid_argument("surface point: all coordinates are zero");
    SurfacePoint p{std::move(coords)};
    if (!contains(p.coords))
        throw std::invalid_argument("surface point: " + p.str() + " is not on the surface");
    if (all_zero(gradient(p.coords)))
        throw std::invalid_argument("surface point: the surface is singular at " + p.str());
    return p;
}

SurfacePoint CubicSurface::point(const std::string& text) const {
    return point(parse_point(text, field(), 4));
}

std::string tangent_case_name(TangentCase c) {
    switch (c) {
    case TangentCase::a: return "a";
    case TangentCase::b: return "b";
    case TangentCase::c: return "c";
    case TangentCase::d: return "d";
    case TangentCase::e: return "e";
    case TangentCase::f: return "f";
    }
    throw std::logic_error("tangent_case_name: bad value");
}

std::string tangent_case_description(TangentCase c) {
    switch (c) {
    case TangentCase::a: return "three lines through the point";
    case TangentCase::b: return "a line and a conic, tangent at the point";
    case TangentCase::c: return "a cuspidal cubic";
    case TangentCase::d: return "a nodal cubic, irreducible";
    case TangentCase::e: return "three lines, two through the point";
    case TangentCase::f: return "a line and a conic crossing at the point";
    }
    throw std::logic_error("tangent_case_description: bad value");
}

TangentSectionReport tangent_section(const CubicSurface& s, const SurfacePoint& p) {
    const FieldPtr& f = s.field();
    FVec g = s.gradient(p.coords);
    if (all_zero(g)) throw std::invalid_argument("tangent_section: singular point");

    auto [v1, v2] = complete_frame(g, p.coords);

    // Restrict the cubic to the tangent plane in the frame (p, v1, v2); the
    // point of tangency becomes (1:0:0).
    MultiPoly S = MultiPoly::variable(f, 3, 0);
    MultiPoly T = MultiPoly::variable(f, 3, 1);
    MultiPoly U = MultiPoly::variable(f, 3, 2);
    std::vector<MultiPoly> images;
    for (int i = 0; i < 4; ++i)
        images.push_back(S.scaled(p.coords[i]) + T.scaled(v1[i]) + U.scaled(v2[i]));
    MultiPoly section = s.form().substitute(images);
    if (section.is_zero())
        throw std::logic_error("tangent_section: the tangent plane lies on the surface");

    MultiPoly one3 = MultiPoly::constant(f, 2, f->one());
    MultiPoly t2 = MultiPoly::variable(f, 2, 0);
    MultiPoly u2 = MultiPoly::variable(f, 2, 1);
    MultiPoly germ_poly = section.substitute({one3, t2, u2});
    int mult = germ_poly.order();
    if (mult < 2)
        throw std::logic_error("tangent_section: the section is not singular at the point");

    PlaneCurveGerm germ(germ_poly);
    GermClassification local = classify_germ(germ);
    Rational lct = lct_via_blowups(germ).lct;
    if (local.type != GermType::other && lct != lct_table(local.type))
        throw std::logic_error("tangent_section: threshold disagrees with the local type");

    // Field-rational components.
    LinearFactorization fact = linear_factors(section);
    for (const auto& lf : fact.factors)
        if (lf.multiplicity > 1)
            throw std::runtime_error("tangent_section: non-reduced section, the surface is "
                                     "singular along a line");

    FVec origin = {f->one(), f->zero(), f->zero()};
    std::vector<SectionComponent> comps;
    int lines_through = 0;
    int conjugate_branches_at_p = 0;
    for (const auto& lf : fact.factors) {
        bool through = lf.coeffs[0].is_zero();
        if (through) ++lines_through;
        comps.push_back({1, "line", through, lf.coeffs});
    }
    const MultiPoly& residual = fact.residual;
    int res_deg = residual.total_degree();
    bool residual_smooth_conic = false;
    if (res_deg == 2) {
        auto a = conic_matrix(residual);
        bool through = residual.evaluate(origin).is_zero();
        if (!det3_field(a).is_zero()) {
            residual_smooth_conic = true;
            comps.push_back({2, "smooth conic", through, {}});
        } else {
            if (matrix_rank_at_most_one(a))
                throw std::runtime_error("tangent_section: non-reduced section, the surface "
                                         "is singular along a line");
            // A point of the field on the pair lies on both conjugate lines.
            if (through) conjugate_branches_at_p = 2;
            comps.push_back({2, "conjugate line pair", through, {}});
        }
    } else if (res_deg == 3) {
        comps.push_back({3, mult == 3 ? "three conjugate lines" : "irreducible cubic",
                         residual.evaluate(origin).is_zero(), {}});
    }

    // Case decision from the local type, cross-checked against the components.
    TangentCase tc;
    if (mult == 3) {
        if (local.type != GermType::ordinary_triple)
            throw std::logic_error("tangent_section: multiplicity 3 with a non-triple germ");
        tc = TangentCase::a;
    } else if (local.type == GermType::tacnode) {
        if (fact.factors.size() != 1 || !residual_smooth_conic || lines_through != 1)
            throw std::logic_error("tangent_section: tacnode without the line-conic shape");
        tc = TangentCase::b;
    } else if (local.type == GermType::cusp) {
        if (!fact.factors.empty() || res_deg != 3)
            throw std::logic_error("tangent_section: cusp on a reducible section");
        tc = TangentCase::c;
    } else if (local.type == GermType::node) {
        if (res_deg == 3) {
            tc = TangentCase::d;
        } else if (fact.factors.size() == 3 ||
                   (fact.factors.size() == 1 && res_deg == 2 && !residual_smooth_conic)) {
            if (lines_through + conjugate_branches_at_p != 2)
                throw std::logic_error("tangent_section: three lines but not two through "
                                       "the node");
            tc = TangentCase::e;
        } else if (fact.factors.size() == 1 && residual_smooth_conic) {
            if (lines_through != 1)
                throw std::logic_error("tangent_section: line-conic node with the line "
                                       "off the point");
            tc = TangentCase::f;
        } else {
            throw std::logic_error("tangent_section: unrecognized nodal component shape");
        }
    } else {
        throw std::logic_error("tangent_section: local type outside the six cases");
    }

    // Second route for b versus f: the order of contact of the line with the
    // conic at the point.
    if (tc == TangentCase::b || tc == TangentCase::f) {
        const auto& lam = fact.factors[0].coeffs;
        FVec w = second_point_on_line(lam, origin);
        int contact = order_along_line(residual, origin, w);
        int expected = tc == TangentCase::b ? 2 : 1;
        if (contact != expected)
            throw std::logic_error("tangent_section: line-conic contact " +
                                   std::to_string(contact) + " disagrees with case " +
                                   tangent_case_name(tc));
    }

    TangentSectionReport report{std::move(g),
                                {p.coords, v1, v2},
                                std::move(section),
                                std::move(germ_poly),
                                std::move(local),
                                lct,
                                tc,
                                std::move(comps)};
    return report;
}

bool is_eckardt(const CubicSurface& s, const SurfacePoint& p) {
    TangentSectionReport r = tangent_section(s, p);
    bool by_case = r.tangent_case == TangentCase::a;
    bool by_mult = r.germ_poly.order() == 3;
    bool by_type = r.local_type.type == GermType::ordinary_triple;
    if (by_case != by_mult || by_case != by_type)
        throw std::logic_error("is_eckardt: the case, multiplicity, and local type disagree");
    return by_case;
}

std::vector<SurfaceLine> lines_through_point(const CubicSurface& s, const SurfacePoint& p) {
    TangentSectionReport r = tangent_section(s, p);
    std::vector<SurfaceLine> out;
    for (const auto& comp : r.components) {
        if (comp.degree != 1 || !comp.through_point) continue;
        // Lift the in-plane line to a second ambient form: mu with
        // mu . frame_row = the in-plane coefficient, row by row.
        FVec mu = solve_particular(r.frame, comp.line, s.field());
        out.push_back({r.plane, mu});
    }
    return out;
}

PointProfile cubic_point_profile(const TangentSectionReport& report) {
    PointProfile prof;
    prof.degree = 3;
    prof.eckardt = report.tangent_case == TangentCase::a;
    prof.tacnodal_section = report.tangent_case == TangentCase::b;
    prof.cuspidal_section = report.tangent_case == TangentCase::c;
    return prof;
}

AlphaResult alpha_at_cubic_point(const CubicSurface& s, const SurfacePoint& p) {
    TangentSectionReport report = tangent_section(s, p);
    AlphaResult res = alpha_at_point(cubic_point_profile(report), ProfileProvenance::computed);
    if (res.value != report.lct_at_point)
        throw std::logic_error("alpha_at_cubic_point: table value " + res.value.str() +
                               " disagrees with the local threshold " +
                               report.lct_at_point.str());
    res.justification += "; tangent section case " + tangent_case_name(report.tangent_case) +
                         " with local threshold " + report.lct_at_point.str();
    return res;
}

std::vector<SurfacePoint> scan_cubic_points(const CubicSurface& s, long height) {
    if (height < 1) throw std::invalid_argument("scan_cubic_points: height must be >= 1");
    const FieldPtr& f = s.field();
    std::vector<SurfacePoint> out;
    std::set<std::vector<Rational>> seen;
    std::vector<long> v(4);
    for (v[0] = -height; v[0] <= height; ++v[0])
        for (v[1] = -height; v[1] <= height; ++v[1])
            for (v[2] = -height; v[2] <= height; ++v[2])
                for (v[3] = -height; v[3] <= height; ++v[3]) {
                    // normalize: positive leading sign, lowest terms
                    int lead = 0;
                    while (lead < 4 && v[lead] == 0) ++lead;
                    if (lead == 4) continue;
                    std::vector<Rational> key;
                    for (long c : v) key.push_back(Rational(c, v[lead]));
                    if (!seen.insert(key).second) continue;

                    long g = 0;
                    for (long c : v) g = std::gcd(g, c);
                    long sign = v[lead] > 0 ? 1 : -1;
                    std::vector<FieldElement> coords;
                    for (long c : v) coords.push_back(f->from_rational(Rational(c * sign, g)));
                    if (!s.contains(coords)) continue;
                    bool singular = true;
                    for (const auto& g : s.gradient(coords)) singular = singular && g.is_zero();
                    if (singular) continue;
                    out.push_back(s.point(coords));
                }
    return out;
}

// ---- plane blow-up models ----

PlanePoint::PlanePoint(Rational ax, Rational ay) : x(std::move(ax)), y(std::move(ay)), z(1) {}

PlanePoint::PlanePoint(Rational ax, Rational ay, Rational az)
    : x(std::move(ax)), y(std::move(ay)), z(std::move(az)) {
    Rational scale;
    if (!z.is_zero())
        scale = z;
    else if (!y.is_zero())
        scale = y;
    else if (!x.is_zero())
        scale = x;
    else
        throw std::invalid_argument("plane point: all coordinates are zero");
    x = x / scale;
    y = y / scale;
    z = z / scale;
}

std::string PlanePoint::str() const {
    if (z.is_one()) return "(" + x.str() + ", " + y.str() + ")";
    return "(" + x.str() + " : " + y.str() + " : " + z.str() + ")";
}

BlowupModel::BlowupModel(int degree, std::vector<PlanePoint> base_points)
    : degree_(degree), pts_(std::move(base_points)) {
    if (degree_ < 4 || degree_ > 8)
        throw std::invalid_argument("blow-up model: degree must be 4..8, got " +
                                    std::to_string(degree_));
    if (pts_.size() != static_cast<size_t>(9 - degree_))
        throw std::invalid_argument("blow-up model: degree " + std::to_string(degree_) +
                                    " needs " + std::to_string(9 - degree_) + " base points, got " +
                                    std::to_string(pts_.size()));
    for (size_t i = 0; i < pts_.size(); ++i)
        for (size_t j = i + 1; j < pts_.size(); ++j)
            if (pts_[i] == pts_[j])
                throw std::invalid_argument("blow-up model: base points " + std::to_string(i) +
                                            " and " + std::to_string(j) + " coincide");
    no3_ = true;
    for (size_t i = 0; i < pts_.size(); ++i)
        for (size_t j = i + 1; j < pts_.size(); ++j)
            for (size_t k = j + 1; k < pts_.size(); ++k)
                if (collinear(pts_[i], pts_[j], pts_[k])) no3_ = false;
    if (!no3_)
        throw std::invalid_argument("blow-up model: three base points are collinear, the "
                                    "anticanonical model is not of the stated degree");
    no6_ = true; // at most five base points here, so no six can sit on a conic
}

PointProfile model_point_profile(const BlowupModel& m, const PlanePoint& p) {
    for (size_t i = 0; i < m.base_points().size(); ++i)
        if (m.base_points()[i] == p)
            throw std::invalid_argument("model point profile: " + p.str() +
                                        " is base point " + std::to_string(i) +
                                        "; query it as an infinitely-near direction");

    PointProfile prof;
    prof.degree = m.degree();
    if (m.degree() == 8) prof.dp8_model = Dp8Model::blowup_of_plane;

    const auto& pts = m.base_points();
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            if (rdot3(cross(as_vec(pts[i]), as_vec(pts[j])), as_vec(p)).is_zero()) {
                prof.on_minus_one_curve = true;
                if (m.degree() == 7) prof.on_special_dp7_curve = true;
            }
        }
    }

    if (m.degree() == 4) {
        // The conic through all five base points is a (-1)-curve.
        if (conic_eval(conic_through(pts), p).is_zero()) prof.on_minus_one_curve = true;

        // Tangent zero-curve pair: the line joining base point i to p against
        // the conic through p and the other four base points.
        for (size_t i = 0; i < pts.size(); ++i) {
            std::vector<PlanePoint> five;
            for (size_t j = 0; j < pts.size(); ++j)
                if (j != i) five.push_back(pts[j]);
            five.push_back(p);
            Conic c = conic_through(five);
            RVec3 grad = conic_gradient(c, p);
            bool tangent = rvec_zero(grad) || rdot3(grad, as_vec(pts[i])).is_zero();
            if (tangent) {
                prof.tangent_zero_curve_pair = true;
                break;
            }
        }
    }
    return prof;
}

PointProfile model_point_profile(const BlowupModel& m, size_t base, const PlanePoint& toward) {
    if (base >= m.base_points().size())
        throw std::invalid_argument("model point profile: base index out of range");
    if (m.base_points()[base] == toward)
        throw std::invalid_argument("model point profile: the direction point coincides with "
                                    "the base point");
    PointProfile prof;
    prof.degree = m.degree();
    if (m.degree() == 8) prof.dp8_model = Dp8Model::blowup_of_plane;
    prof.on_minus_one_curve = true; // the point sits on the exceptional curve
    if (m.degree() == 7 && collinear(m.base_points()[0], m.base_points()[1], toward))
        prof.on_special_dp7_curve = true;
    return prof;
}

AlphaBound alpha_invariant(const BlowupModel& m, const std::vector<PlanePoint>& samples) {
    struct Eval {
        Rational value;
        std::string witness;
    };
    std::vector<Eval> evals;
    for (const auto& p : samples) {
        AlphaResult r = alpha_at_point(model_point_profile(m, p), ProfileProvenance::computed);
        evals.push_back({r.value, p.str() + ": " + r.justification});
    }

    int d = m.degree();
    if (d == 6 || d == 8) {
        PointProfile generic;
        generic.degree = d;
        if (d == 8) generic.dp8_model = Dp8Model::blowup_of_plane;
        AlphaResult r = alpha_at_point(generic, ProfileProvenance::computed);
        evals.push_back({r.value, "every point: " + r.justification});
    } else {
        // A third point on the line through the first two base points lies on
        // a (-1)-curve (in degree 7, on the special curve).
        const auto& pts = m.base_points();
        PlanePoint on_line(pts[0].x + pts[1].x, pts[0].y + pts[1].y, pts[0].z + pts[1].z);
        AlphaResult r =
            alpha_at_point(model_point_profile(m, on_line), ProfileProvenance::computed);
        evals.push_back({r.value, on_line.str() + ": " + r.justification});
    }

    if (evals.empty())
        throw std::invalid_argument("alpha_invariant: nothing to evaluate: no samples and no "
                                    "enumerable special points");

    const Eval* best = &evals[0];
    for (const auto& e : evals)
        if (e.value < best->value) best = &e;
    return AlphaBound{best->value, d == 6 || d == 8, best->witness};
}

// ---- branch quartics ----

Dp2BranchModel::Dp2BranchModel(MultiPoly quartic) : q_(std::move(quartic)) {
    if (q_.nvars() != 3)
        throw std::invalid_argument("branch quartic: the form needs 3 variables");
    if (q_.is_zero() || !q_.is_homogeneous() || q_.total_degree() != 4)
        throw std::invalid_argument("branch quartic: the form must be homogeneous of degree 4");
    if (ternary_has_linear_factor(q_))
        throw std::invalid_argument("branch quartic: the form has a linear factor over the "
                                    "field, so it is not a smooth branch curve");
}

PointProfile dp2_point_profile(const Dp2BranchModel& m, const FVec& p) {
    const FieldPtr& f = m.field();
    if (p.size() != 3)
        throw std::invalid_argument("dp2 point profile: needs 3 projective coordinates");
    for (const auto& c : p) require_same_field(c, f->zero());
    if (all_zero(p)) throw std::invalid_argument("dp2 point profile: all coordinates are zero");

    PointProfile prof;
    prof.degree = 2;
    if (!m.quartic().evaluate(p).is_zero()) return prof; // off the branch curve

    FVec grad;
    for (int i = 0; i < 3; ++i) grad.push_back(m.quartic().partial(i).evaluate(p));
    if (all_zero(grad))
        throw std::invalid_argument("dp2 point profile: the branch quartic is singular at "
                                    "the point");

    FVec w = second_point_on_line(grad, p);
    int contact = order_along_line(m.quartic(), p, w);
    if (contact < 0)
        throw std::logic_error("dp2 point profile: the tangent line lies on the quartic");
    if (contact < 2)
        throw std::logic_error("dp2 point profile: tangent line with contact below 2");
    prof.dp2_branch_contact = contact == 2   ? Dp2Contact::two
                              : contact == 3 ? Dp2Contact::three
                                             : Dp2Contact::four_or_more;
    return prof;
}

bool ternary_has_linear_factor(const MultiPoly& form) {
    if (form.nvars() != 3)
        throw std::invalid_argument("ternary_has_linear_factor: needs 3 variables");
    if (form.is_zero() || !form.is_homogeneous())
        throw std::invalid_argument("ternary_has_linear_factor: needs a nonzero homogeneous form");
    int n = form.total_degree();
    if (n == 1) return true;
    const FieldPtr& f = form.field();

    // Divisibility by the third variable shows up directly in the exponents.
    bool z_divides = true;
    for (const auto& [e, c] : form.terms())
        if (e[2] == 0) z_divides = false;
    if (z_divides) return true;

    // Candidates x = m y + n z: m must be a root of the z = 0 restriction.
    std::vector<FieldElement> b0(n + 1, f->zero());
    for (const auto& [e, c] : form.terms())
        if (e[2] == 0) b0[e[0]] = c;
    KPoly g(f, b0);

    MultiPoly Y = MultiPoly::variable(f, 3, 0);
    MultiPoly Z = MultiPoly::variable(f, 3, 1);
    MultiPoly N = MultiPoly::variable(f, 3, 2);

    auto try_pattern = [&](const MultiPoly& image_of_replaced, int replaced_var) -> bool {
        // Substitute the linear image for one variable, keep the others; the
        // third slot of the target space is the free parameter.
        std::vector<MultiPoly> images(3, Y);
        images[replaced_var] = image_of_replaced;
        int kept = 0;
        for (int v = 0; v < 3; ++v) {
            if (v == replaced_var) continue;
            images[v] = kept == 0 ? Y : Z;
            ++kept;
        }
        MultiPoly R = form.substitute(images);
        for (int j = 1; j <= n; ++j) {
            std::vector<FieldElement> cj(j + 1, f->zero());
            bool nonzero = false;
            for (int gdeg = 0; gdeg <= j; ++gdeg) {
                FieldElement c = R.coeff({n - j, j, gdeg});
                cj[gdeg] = c;
                if (!c.is_zero()) nonzero = true;
            }
            if (!nonzero) continue;
            KPoly cpoly(f, cj);
            if (cpoly.degree() < 1) return false; // a nonzero constant: no parameter works
            for (const auto& root : roots_in_field(cpoly)) {
                MultiPoly check =
                    R.substitute({Y, Z, MultiPoly::constant(f, 3, root)});
                if (check.is_zero()) return true;
            }
            return false;
        }
        throw std::logic_error("ternary_has_linear_factor: vanishing substitution");
    };

    // Pattern x -> m y + n z for each admissible m.
    for (const auto& mroot : roots_in_field(g)) {
        if (try_pattern(Y.scaled(mroot) + N * Z, 0)) return true;
    }
    // Pattern y -> w z, admissible only when the pure x^n coefficient is zero.
    std::vector<int> xn = {n, 0, 0};
    if (form.coeff(xn).is_zero()) {
        if (try_pattern(N * Z, 1)) return true;
    }
    return false;
}

} // namespace delpezzo
