// Release gate. Eight criteria, each printed as one pass/fail line with its
// runtime against the pinned limit. The process exits 0 only when every
// criterion passes inside its limit.
#include "delpezzo/alpha.hpp"
#include "delpezzo/descent.hpp"
#include "delpezzo/fixtures.hpp"
#include "delpezzo/germ.hpp"
#include "delpezzo/log_pair.hpp"
#include "delpezzo/picard.hpp"
#include "delpezzo/poly_parse.hpp"
#include "delpezzo/surface.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

using namespace delpezzo;

namespace {

struct Criterion {
    std::string label;
    double limit_seconds;
    bool (*run)(std::string& detail);
};

std::mt19937_64 rng(0x5eed5eedULL);

long rand_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Rational rand_rational(long lo, long hi, long max_den) {
    return Rational(rand_int(lo, hi), rand_int(1, max_den));
}

// 1. Threshold values survive random exact coordinate changes.
bool check_lct_oracle(std::string& detail) {
    FieldPtr q = NumberField::rationals();
    std::vector<std::string> vars = {"x", "y"};
    struct Case {
        const char* text;
        Rational expected;
    };
    std::vector<Case> cases = {
        {"x*y", Rational(1)},
        {"y^2 - x^3", Rational(5, 6)},
        {"y^2 - x^4", Rational(3, 4)},
        {"x^3 - x*y^2", Rational(2, 3)},
    };
    for (const auto& c : cases) {
        PlaneCurveGerm germ(parse_polynomial(c.text, q, vars));
        for (int trial = 0; trial < 100; ++trial) {
            Rational a, b, cc, d;
            do {
                a = rand_rational(-9, 9, 3);
                b = rand_rational(-9, 9, 3);
                cc = rand_rational(-9, 9, 3);
                d = rand_rational(-9, 9, 3);
            } while ((a * d - b * cc).is_zero());
            LctCertificate cert = lct_via_blowups(germ.linear_change(a, b, cc, d));
            if (cert.lct != c.expected) {
                detail = std::string(c.text) + " after a coordinate change: got " +
                         cert.lct.str() + ", expected " + c.expected.str();
                return false;
            }
        }
    }
    detail = "node 1, cusp 5/6, tacnode 3/4, ordinary triple 2/3 on 100 changes each";
    return true;
}

// 2. The Fermat cubic at (1 : -1 : 0 : 0) over Q(zeta_3).
bool check_fermat(std::string& detail) {
    FieldPtr f = NumberField::create(RatPoly({Rational(1), Rational(1), Rational(1)}));
    std::vector<std::string> vars = {"x", "y", "z", "w"};
    CubicSurface s(parse_polynomial("x^3 + y^3 + z^3 + w^3", f, vars));
    SurfacePoint p = s.point("1, -1, 0, 0");
    TangentSectionReport rep = tangent_section(s, p);
    if (rep.tangent_case != TangentCase::a) {
        detail = "tangent case " + tangent_case_name(rep.tangent_case) + ", expected a";
        return false;
    }
    for (const auto& c : rep.components)
        if (c.degree != 1 || !c.through_point) {
            detail = "a component is not a line through the point";
            return false;
        }
    if (lines_through_point(s, p).size() != 3) {
        detail = "expected 3 rational lines";
        return false;
    }
    AlphaResult alpha = alpha_at_cubic_point(s, p);
    if (alpha.value != Rational(2, 3)) {
        detail = "alpha " + alpha.value.str() + ", expected 2/3";
        return false;
    }
    CylinderVerdict v = cylinder_verdict(3);
    if (v.action_exists || v.citation.empty()) {
        detail = "degree 3 verdict must refuse the action and cite its row";
        return false;
    }
    detail = "case a, three lines, alpha 2/3, no additive action in degree 3";
    return true;
}

// 3. (-1)-class counts by exhaustive lattice search.
bool check_minus_one_counts(std::string& detail) {
    std::vector<size_t> expected = {1, 3, 6, 10, 16, 27, 56, 240};
    for (size_t r = 1; r <= 8; ++r) {
        size_t got = minus_one_classes(r).size();
        if (got != expected[r - 1]) {
            detail = "r = " + std::to_string(r) + ": " + std::to_string(got) +
                     " classes, expected " + std::to_string(expected[r - 1]);
            return false;
        }
    }
    if (zero_curve_pairs(5).size() != 5) {
        detail = "degree 4 zero-curve pairs: expected exactly 5";
        return false;
    }
    detail = "counts 1, 3, 6, 10, 16, 27, 56, 240 and 5 zero-curve pairs in degree 4";
    return true;
}

// 4. Convexity transform on random valid pairs, re-derived coefficientwise.
bool check_convexity(std::string& detail) {
    for (int trial = 0; trial < 1000; ++trial) {
        size_t rank = (size_t)rand_int(1, 6);
        size_t n = (size_t)rand_int(3, 6);
        // Classes with the built-in relation v0 = v1 + v2, so equal-class
        // perturbations along (1, -1, -1, 0, ...) exist. The degree part
        // dominates the exceptional part, keeping every pairing positive
        // (QDivisor rejects distinct curves whose classes pair negatively).
        std::vector<DivisorClass> cls;
        for (size_t i = 0; i < n; ++i) {
            std::vector<long> v(rank);
            v[0] = rand_int(3, 6);
            for (size_t j = 1; j < rank; ++j) v[j] = rand_int(-1, 1);
            cls.push_back(DivisorClass::integral(v));
        }
        cls[0] = cls[1] + cls[2];

        std::vector<Rational> a;
        for (size_t i = 0; i < n; ++i)
            a.push_back(Rational(rand_int(1, 16), 8));
        Rational eps = (a[1] < a[2] ? a[1] : a[2]) * Rational(rand_int(1, 4), 4);
        std::vector<Rational> b = a;
        b[0] += eps;
        b[1] -= eps;
        b[2] -= eps;

        std::vector<QTerm> dt, tt;
        for (size_t i = 0; i < n; ++i) {
            SymbolicCurve curve("C" + std::to_string(i), cls[i]);
            dt.push_back({a[i], curve});
            tt.push_back({b[i], curve});
        }
        QDivisor d(dt, rank), t(tt, rank);

        ConvexityResult res = convexity_transform(d, t);

        // Independent recomputation of the arg max and the closed form.
        size_t k = 0;
        Rational c = b[0] / a[0];
        for (size_t i = 1; i < n; ++i) {
            Rational ratio = b[i] / a[i];
            if (ratio > c) {
                c = ratio;
                k = i;
            }
        }
        Rational mu = Rational(1) / (c - Rational(1));
        if (res.mu != mu || res.dropped != "C" + std::to_string(k)) {
            detail = "trial " + std::to_string(trial) + ": mu or dropped component disagrees";
            return false;
        }
        if (!(res.d_mu.cls() == d.cls())) {
            detail = "trial " + std::to_string(trial) + ": class not preserved";
            return false;
        }
        for (size_t i = 0; i < n; ++i) {
            Rational closed = (Rational(1) + mu) * a[i] - mu * b[i];
            const Rational& got = res.d_mu.terms()[i].coeff;
            if (got != closed) {
                detail = "trial " + std::to_string(trial) + ": coefficient " +
                         std::to_string(i) + " is " + got.str() + ", closed form " +
                         closed.str();
                return false;
            }
            if (got.sign() < 0) {
                detail = "trial " + std::to_string(trial) + ": negative coefficient";
                return false;
            }
        }
        if (!res.d_mu.terms()[k].coeff.is_zero()) {
            detail = "trial " + std::to_string(trial) + ": arg-max coefficient nonzero";
            return false;
        }
    }
    detail = "1000 random pairs: zero at the arg max, nonnegative, class kept, closed form "
             "exact";
    return true;
}

// 5. Descent: seeded state and random valid runs.
bool check_descent(std::string& detail) {
    TriangleState seed;
    seed.a = Rational(4, 5);
    seed.b = Rational(4, 5);
    seed.c = Rational(0);
    seed.m = Rational(3, 10);
    seed.omega = {OmegaComponent{Rational(7, 5), 1}};
    if (!validate_state(seed).pass) {
        detail = "the seeded state a = b = 4/5, c = 0, m = 3/10 must validate";
        return false;
    }
    DescentTrace seeded = run_descent(seed, std::vector<Rational>(8, Rational(3, 10)), 8);
    if (seeded.terminal != DescentTerminal::contradiction ||
        seeded.certificate.find("floor") == std::string::npos) {
        detail = "the seeded run must end in a floor contradiction";
        return false;
    }

    for (int trial = 0; trial < 150; ++trial) {
        TriangleState s;
        s.a = Rational(rand_int(1, 16), 16);
        s.b = Rational(rand_int(1, 16), 16);
        s.c = Rational(0);
        Rational lo = Rational(1) - s.a - s.b;
        if (lo.sign() < 0) lo = Rational(0);
        Rational hi = Rational(2) - s.a - s.b;
        s.m = lo + (hi - lo) * Rational(rand_int(1, 7), 8);

        Rational total = Rational(3) - s.a - s.b;
        long parts = rand_int(1, 3);
        Rational left = total;
        for (long i = 0; i < parts; ++i) {
            Rational share = i + 1 == parts ? left : left * Rational(rand_int(1, 3), 4);
            left -= share;
            long deg = rand_int(1, 2);
            s.omega.push_back({share / Rational(deg), deg});
        }
        if (!validate_state(s).pass) {
            detail = "trial " + std::to_string(trial) + ": generator produced an invalid state";
            return false;
        }

        // Oracle values chosen inside the valid window of each successor.
        std::vector<Rational> oracle;
        Rational c = s.c, m = s.m;
        for (int step = 0; step < 12; ++step) {
            c = s.a + s.b + m - Rational(1);
            Rational wlo = c + Rational(1) - s.a - s.b;
            if (wlo.sign() < 0) wlo = Rational(0);
            Rational whi = Rational(2) - s.a - s.b;
            m = wlo + (whi - wlo) * Rational(rand_int(1, 7), 8);
            oracle.push_back(m);
        }

        DescentTrace trace = run_descent(s, oracle, 12);
        for (size_t i = 0; i + 1 < trace.states.size(); ++i) {
            const TriangleState& cur = trace.states[i];
            Rational expect_dec = cur.a + cur.b + cur.m - Rational(1) - cur.c;
            if (trace.decrements[i] != expect_dec || trace.decrements[i].sign() <= 0) {
                detail = "trial " + std::to_string(trial) + ": decrement mismatch at step " +
                         std::to_string(i);
                return false;
            }
            if (!(trace.states[i + 1].omega_degree() < cur.omega_degree())) {
                detail = "trial " + std::to_string(trial) + ": residual degree not decreasing";
                return false;
            }
        }
        if (trace.terminal == DescentTerminal::contradiction && trace.certificate.empty()) {
            detail = "trial " + std::to_string(trial) + ": contradiction without certificate";
            return false;
        }
    }
    detail = "seed validates and contradicts below floor 7/5; 150 random runs decrease "
             "strictly with positive decrements";
    return true;
}

// 6. The degree-4 configuration lands on -K with a coefficient above 1.
bool check_remark_configuration(std::string& detail) {
    std::vector<QTerm> terms;
    SymbolicCurve conic("Ct", DivisorClass::integral({2, -1, -1, -1, -1, -1}));
    terms.push_back({Rational(3, 2), conic});
    for (int i = 1; i <= 5; ++i) {
        std::vector<long> v(6, 0);
        v[i] = 1;
        terms.push_back({Rational(1, 2), SymbolicCurve("E" + std::to_string(i),
                                                       DivisorClass::integral(v))});
    }
    QDivisor d(terms, 6);
    if (!(d.cls() == anticanonical_class(5))) {
        detail = "class " + d.cls().str() + " is not -K on the degree-4 lattice";
        return false;
    }
    if (!anticanonical_degree_check(d).pass) {
        detail = "(-K).D disagrees with the lattice degree";
        return false;
    }
    std::vector<std::string> bad = not_lc_along_curves(d);
    if (bad != std::vector<std::string>{"Ct"}) {
        detail = "the coefficient-above-1 flag must name exactly Ct";
        return false;
    }
    detail = "(3/2)Ct + sum (1/2)Ei has class -K and is flagged not lc along Ct";
    return true;
}

// 7. The two-component inequality system caps m1 at 1.
bool check_dp2_grid(std::string& detail) {
    for (long k = 0; k <= 2; ++k) {
        for (long i = 0; i <= 32; ++i) {
            for (long j = 0; j <= 32; ++j) {
                Rational m1(i, 16), m2(j, 16);
                Dp2BoundCheck check = dp2_component_bound(k, m1, m2);
                if (check.system_satisfied && m1 > Rational(1)) {
                    detail = "k = " + std::to_string(k) + ": system satisfied at m1 = " +
                             m1.str() + ", m2 = " + m2.str();
                    return false;
                }
                if (!check.forces_m1_le_1) {
                    detail = "k = " + std::to_string(k) + " must force m1 <= 1";
                    return false;
                }
            }
        }
    }
    detail = "k in {0, 1, 2}, 33 x 33 grid at step 1/16: no solution with m1 > 1";
    return true;
}

// 8. Every alpha table row is hit by a fixture profile with the exact value.
bool check_table_coverage(std::string& detail) {
    std::map<std::string, Rational> table = {
        {"degree 9", Rational(1, 3)},
        {"degree 8, plane blow-up", Rational(1, 3)},
        {"degree 8, quadric", Rational(1, 2)},
        {"degree 7, special curve", Rational(1, 3)},
        {"degree 7, generic", Rational(1, 2)},
        {"degree 6", Rational(1, 2)},
        {"degree 5, on a (-1)-curve", Rational(1, 2)},
        {"degree 5, generic", Rational(2, 3)},
        {"degree 4, on a (-1)-curve", Rational(2, 3)},
        {"degree 4, tangent zero-curve pair", Rational(3, 4)},
        {"degree 4, generic", Rational(5, 6)},
        {"degree 3, Eckardt", Rational(2, 3)},
        {"degree 3, tacnodal", Rational(3, 4)},
        {"degree 3, cuspidal", Rational(5, 6)},
        {"degree 3, generic", Rational(1)},
        {"degree 2, contact >= 4", Rational(3, 4)},
        {"degree 2, contact 3", Rational(5, 6)},
        {"degree 2, generic", Rational(1)},
        {"degree 1, cuspidal member", Rational(5, 6)},
        {"degree 1, generic", Rational(1)},
    };
    std::vector<std::string> rows = all_alpha_rows();
    if (rows.size() != table.size()) {
        detail = "row list and table size disagree";
        return false;
    }
    for (const auto& row : rows)
        if (!table.count(row)) {
            detail = "row \"" + row + "\" missing from the pinned table";
            return false;
        }

    std::map<std::string, int> hits;
    std::vector<std::string> paths;
    for (const auto& entry : std::filesystem::directory_iterator(FIXTURE_DIR))
        if (entry.path().extension() == ".fixture") paths.push_back(entry.path().string());
    for (const auto& path : paths) {
        FixtureRecord rec = load_fixture(path);
        if (rec.kind != "cubic-point" && rec.kind != "model-point" &&
            rec.kind != "dp2-point" && rec.kind != "profile")
            continue;
        FixtureReport report = run_fixture(rec);
        if (!report.pass) {
            detail = "fixture " + report.name + " failed";
            return false;
        }
        const std::string& row = report.results.at("row");
        const std::string& alpha = report.results.at("alpha");
        auto it = table.find(row);
        if (it == table.end()) {
            detail = "fixture " + report.name + " hit unknown row \"" + row + "\"";
            return false;
        }
        if (alpha != it->second.str()) {
            detail = "fixture " + report.name + ": alpha " + alpha + " on row \"" + row +
                     "\", table says " + it->second.str();
            return false;
        }
        ++hits[row];
    }
    for (const auto& [row, value] : table)
        if (!hits.count(row)) {
            detail = "row \"" + row + "\" (" + value.str() + ") not hit by any fixture";
            return false;
        }
    detail = "all " + std::to_string(table.size()) + " rows hit with the exact table value";
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"threshold oracle on random coordinate changes", 10.0, check_lct_oracle},
        {"Fermat cubic Eckardt point and degree-3 verdict", 1.0, check_fermat},
        {"(-1)-class counts and zero-curve pairs", 5.0, check_minus_one_counts},
        {"convexity transform on 1000 random pairs", 5.0, check_convexity},
        {"descent seed and random valid runs", 1.0, check_descent},
        {"degree-4 anticanonical configuration", 1.0, check_remark_configuration},
        {"two-component inequality grid", 1.0, check_dp2_grid},
        {"alpha table row coverage by fixtures", 1.0, check_table_coverage},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        std::string detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = elapsed < c.limit_seconds;
        bool pass = ok && in_time;
        failures += pass ? 0 : 1;
        std::printf("[%zu/%zu] %s  %-48s %.2f s (limit %.0f s)\n", i + 1, criteria.size(),
                    pass ? "PASS" : "FAIL", c.label.c_str(), elapsed, c.limit_seconds);
        if (!pass) std::printf("        %s%s\n", detail.c_str(),
                               ok && !in_time ? " (over the time limit)" : "");
        else std::printf("        %s\n", detail.c_str());
    }
    std::printf("acceptance: %zu/%zu criteria pass\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
