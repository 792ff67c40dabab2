#include "delpezzo/log_pair.hpp"

#include <doctest.h>
#include <random>

using namespace delpezzo;

namespace {
Rational rat(long p, long q = 1) { return Rational(Integer(p), Integer(q)); }

// The degree-4 configuration: C tilde = 2H - E1 - ... - E5 with the five
// exceptional curves, all through nothing in particular.
QDivisor remark_divisor(const Rational& c_coeff, const Rational& e_coeff) {
    std::vector<QTerm> terms;
    terms.push_back({c_coeff, SymbolicCurve("Ct", DivisorClass::integral({2, -1, -1, -1, -1, -1}))});
    for (int i = 1; i <= 5; ++i) {
        std::vector<long> coords(6, 0);
        coords[i] = 1;
        terms.push_back({e_coeff, SymbolicCurve("E" + std::to_string(i), DivisorClass::integral(coords))});
    }
    return QDivisor(std::move(terms), 6);
}
} // namespace

TEST_CASE("anticanonical degree check") {
    // (3/2) Ct + (1/2) sum E_i on degree 4: pairing with -K gives exactly 4.
    QDivisor d = remark_divisor(rat(3, 2), rat(1, 2));
    auto check = anticanonical_degree_check(d);
    CHECK(check.pass);
    CHECK(check.value == rat(4));
    CHECK(check.expected == 4);
    // It is in fact the anticanonical class itself.
    CHECK(d.cls() == anticanonical_class(5));

    // Coefficient 1 on an anticanonical curve passes; coefficient 2 fails.
    SymbolicCurve anti("A", anticanonical_class(6));
    QDivisor good({{rat(1), anti}}, 7);
    CHECK(anticanonical_degree_check(good).pass);
    QDivisor bad({{rat(2), anti}}, 7);
    auto fail = anticanonical_degree_check(bad);
    CHECK_FALSE(fail.pass);
    CHECK(fail.value == rat(6));
    CHECK(fail.expected == 3);
}

TEST_CASE("not-lc-along-curve flag") {
    CHECK(not_lc_along_curves(remark_divisor(rat(3, 2), rat(1, 2))) ==
          std::vector<std::string>{"Ct"});
    CHECK(not_lc_along_curves(remark_divisor(rat(1), rat(1))).empty());
}

TEST_CASE("multiplicity refutation") {
    SymbolicCurve line("L", DivisorClass::integral({1}));
    line.declare_multiplicity("P", 1);
    QDivisor single({{rat(1), line}}, 1);
    auto r = multiplicity_refute(single, "P", true);
    CHECK(r.verdict == PairVerdict::refuted);
    CHECK(r.value == rat(1));

    QDivisor heavier({{rat(3, 2), line}}, 1);
    CHECK(multiplicity_refute(heavier, "P", true).verdict == PairVerdict::consistent);

    SymbolicCurve away("M", DivisorClass::integral({1}));
    away.declare_multiplicity("P", 0);
    QDivisor zero({{rat(1), away}}, 1);
    CHECK(multiplicity_refute(zero, "P", true).verdict == PairVerdict::refuted);
    CHECK(multiplicity_refute(zero, "P", true).value == rat(0));

    CHECK(multiplicity_refute(single, "P", false).verdict == PairVerdict::consistent);

    SymbolicCurve undeclared("N", DivisorClass::integral({1}));
    QDivisor missing({{rat(1), undeclared}}, 1);
    CHECK_THROWS_AS(multiplicity_refute(missing, "P", true), std::invalid_argument);
}

TEST_CASE("multiplicity refutation is monotone the right way") {
    // consistent(D) implies consistent(lambda D) for lambda >= 1; equivalently
    // a refuted scaled claim refutes the original.
    SymbolicCurve line("L", DivisorClass::integral({1}));
    line.declare_multiplicity("P", 1);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        Rational a(Integer((long)(rng() % 12) + 1), Integer((long)(rng() % 6) + 1));
        Rational lambda(Integer((long)(rng() % 5) + 1), 1);
        QDivisor d({{a, line}}, 1);
        QDivisor scaled({{a * lambda, line}}, 1);
        bool base_consistent = multiplicity_refute(d, "P", true).verdict == PairVerdict::consistent;
        bool scaled_consistent =
            multiplicity_refute(scaled, "P", true).verdict == PairVerdict::consistent;
        if (base_consistent) CHECK(scaled_consistent);
    }
}

TEST_CASE("convexity transform worked examples") {
    // Two curves with equal classes, D = (1/2, 1), T = (1, 1/2).
    SymbolicCurve c1("C1", DivisorClass::integral({1}));
    SymbolicCurve c2("C2", DivisorClass::integral({1}));
    QDivisor d({{rat(1, 2), c1}, {rat(1), c2}}, 1);
    QDivisor t({{rat(1), c1}, {rat(1, 2), c2}}, 1);
    auto res = convexity_transform(d, t);
    CHECK(res.c == rat(2));
    CHECK(res.mu == rat(1));
    CHECK(res.dropped == "C1");
    CHECK(res.d_mu.terms()[0].coeff == rat(0));
    CHECK(res.d_mu.terms()[1].coeff == rat(3, 2));
    CHECK(res.d_mu.cls() == d.cls());

    // Three components of equal class, D = (1,1,1), T = (3/2, 3/4, 3/4);
    // both sum to class 3.
    SymbolicCurve n1("N1", DivisorClass::integral({1}));
    SymbolicCurve n2("N2", DivisorClass::integral({1}));
    SymbolicCurve n3("N3", DivisorClass::integral({1}));
    QDivisor dd({{rat(1), n1}, {rat(1), n2}, {rat(1), n3}}, 1);
    QDivisor tt({{rat(3, 2), n1}, {rat(3, 4), n2}, {rat(3, 4), n3}}, 1);
    auto r3 = convexity_transform(dd, tt);
    CHECK(r3.c == rat(3, 2));
    CHECK(r3.mu == rat(2));
    CHECK(r3.dropped == "N1");
    CHECK(r3.d_mu.terms()[0].coeff == rat(0));
    CHECK(r3.d_mu.terms()[1].coeff == rat(3, 2));
    CHECK(r3.d_mu.terms()[2].coeff == rat(3, 2));
}

TEST_CASE("convexity transform preconditions") {
    SymbolicCurve c1("C1", DivisorClass::integral({1}));
    SymbolicCurve c2("C2", DivisorClass::integral({1}));
    QDivisor d({{rat(1, 2), c1}, {rat(1), c2}}, 1);
    // T = 2D has a different class.
    QDivisor twice({{rat(1), c1}, {rat(2), c2}}, 1);
    CHECK_THROWS_AS(convexity_transform(d, twice), std::invalid_argument);
    // T = D is rejected.
    CHECK_THROWS_AS(convexity_transform(d, d), std::invalid_argument);
    // Support of T must lie in support of D.
    SymbolicCurve c3("C3", DivisorClass::integral({1}));
    QDivisor elsewhere({{rat(1, 2), c1}, {rat(1, 2), c3}}, 1);
    CHECK_THROWS_AS(convexity_transform(d, elsewhere), std::invalid_argument);
    // Swapping roles still produces a valid, non-negative answer here.
    QDivisor t({{rat(1), c1}, {rat(1, 2), c2}}, 1);
    auto sw = convexity_transform(t, d);
    CHECK(sw.dropped == "C2");
    for (const auto& term : sw.d_mu.terms()) CHECK(term.coeff.sign() >= 0);
}

TEST_CASE("adjunction refutation") {
    SymbolicCurve l("L", DivisorClass::integral({1}));
    l.declare_smooth("P");
    l.declare_intersection("M", "P", 1);
    SymbolicCurve m("M", DivisorClass::integral({1}));
    QDivisor d({{rat(1), l}, {rat(1, 2), m}}, 1);
    auto r = adjunction_refute(d, 0, "P");
    CHECK(r.verdict == PairVerdict::refuted);
    CHECK(r.value == rat(1, 2));

    // Heavier partner: sum 3/2 > 1, no refutation.
    SymbolicCurve l2("L", DivisorClass::integral({1}));
    l2.declare_smooth("P");
    l2.declare_intersection("M", "P", 1);
    SymbolicCurve m2("M", DivisorClass::integral({2}));
    QDivisor d2({{rat(1), l2}, {rat(3, 2), m2}}, 1);
    CHECK(adjunction_refute(d2, 0, "P").verdict == PairVerdict::consistent);

    // Coefficient above 1 makes the inequality inapplicable.
    QDivisor d3({{rat(5, 4), l}, {rat(1, 2), m}}, 1);
    CHECK_THROWS_AS(adjunction_refute(d3, 0, "P"), std::invalid_argument);

    // Smoothness must be declared.
    SymbolicCurve rough("L", DivisorClass::integral({1}));
    rough.declare_intersection("M", "P", 1);
    QDivisor d4({{rat(1), rough}, {rat(1, 2), m}}, 1);
    CHECK_THROWS_AS(adjunction_refute(d4, 0, "P"), std::invalid_argument);
}

TEST_CASE("blow-up pullback and contraction") {
    SymbolicCurve l("L", DivisorClass::integral({1, 0}));
    l.declare_multiplicity("P", 1);
    l.declare_multiplicity("Q", 1);
    l.declare_intersection("M", "P", 1);
    l.declare_smooth("P");
    SymbolicCurve m("M", DivisorClass::integral({1, 0}));
    m.declare_multiplicity("P", 1);
    m.declare_intersection("L", "P", 1);
    QDivisor d({{rat(1), l}, {rat(1, 2), m}}, 2);

    auto pulled = blowup_pullback(d, "P");
    CHECK(pulled.exc_coefficient == rat(1, 2)); // mult = 3/2
    CHECK(pulled.exc_label == "E@P");
    REQUIRE(pulled.transformed.terms().size() == 3);
    // Strict transforms acquire the -mult coordinate.
    CHECK(pulled.transformed.terms()[0].curve.cls() == DivisorClass::integral({1, 0, -1}));
    CHECK(pulled.transformed.terms()[2].curve.cls() == DivisorClass::integral({0, 0, 1}));
    CHECK(pulled.transformed.terms()[2].coeff == rat(1, 2));
    // Declarations away from the center survive on the strict transform.
    CHECK(pulled.transformed.terms()[0].curve.multiplicity_at("Q") == 1);
    CHECK_FALSE(pulled.transformed.terms()[0].curve.multiplicity_at("P").has_value());
    // The uniqueness note fires since mult <= 2.
    REQUIRE(pulled.ledger.size() == 2);
    CHECK(pulled.ledger[1].find("at most one") != std::string::npos);

    QDivisor back = contract_back(pulled);
    CHECK(back == d);
}

TEST_CASE("blow-up pullback boundary cases") {
    SymbolicCurve l("L", DivisorClass::integral({1}));
    l.declare_multiplicity("P", 1);
    QDivisor unit({{rat(1), l}}, 1);
    auto pulled = blowup_pullback(unit, "P");
    CHECK(pulled.exc_coefficient == rat(0));

    QDivisor light({{rat(1, 2), l}}, 1);
    CHECK_THROWS_AS(blowup_pullback(light, "P"), std::invalid_argument);

    QDivisor heavy({{rat(5, 2), l}}, 1);
    auto big = blowup_pullback(heavy, "P");
    CHECK(big.exc_coefficient == rat(3, 2));
    CHECK(big.ledger.size() == 1); // no uniqueness note beyond mult 2
}

TEST_CASE("divisor validation") {
    // Local intersections above the class pairing are rejected.
    SymbolicCurve a("A", DivisorClass::integral({1}));
    a.declare_intersection("B", "P", 2);
    SymbolicCurve b("B", DivisorClass::integral({1}));
    CHECK_THROWS_AS(QDivisor({{rat(1), a}, {rat(1), b}}, 1), std::invalid_argument);

    // Asymmetric declarations must agree.
    SymbolicCurve c("C", DivisorClass::integral({2}));
    c.declare_intersection("D", "P", 2);
    SymbolicCurve e("D", DivisorClass::integral({1}));
    e.declare_intersection("C", "P", 1);
    CHECK_THROWS_AS(QDivisor({{rat(1), c}, {rat(1), e}}, 1), std::invalid_argument);

    // Duplicates and negative coefficients are rejected.
    SymbolicCurve f("F", DivisorClass::integral({1}));
    CHECK_THROWS_AS(QDivisor({{rat(1), f}, {rat(1), f}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(QDivisor({{rat(-1), f}}, 1), std::invalid_argument);
    // Rank mismatch.
    CHECK_THROWS_AS(QDivisor({{rat(1), f}}, 2), std::invalid_argument);
}
