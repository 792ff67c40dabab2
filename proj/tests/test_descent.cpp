#include "doctest.h"

#include "delpezzo/descent.hpp"
#include "delpezzo/log_pair.hpp"

#include <string>
#include <vector>

using namespace delpezzo;

namespace {

TriangleState seed_state() {
    TriangleState s;
    s.a = Rational(4, 5);
    s.b = Rational(4, 5);
    s.c = Rational(0);
    s.m = Rational(3, 10);
    s.omega = {OmegaComponent{Rational(7, 5), 1}};
    return s;
}

bool mentions(const std::vector<std::string>& msgs, const std::string& needle) {
    for (const auto& m : msgs)
        if (m.find(needle) != std::string::npos) return true;
    return false;
}

} // namespace

TEST_CASE("state validation accepts the seed state") {
    StateCheck check = validate_state(seed_state());
    CHECK(check.pass);
    CHECK(check.violations.empty());
    CHECK(seed_state().omega_degree() == Rational(7, 5));
}

TEST_CASE("state validation reports the multiplicity cap with exact excess") {
    TriangleState s = seed_state();
    s.m = Rational(1, 2); // a + b + m = 21/10
    StateCheck check = validate_state(s);
    CHECK_FALSE(check.pass);
    REQUIRE(check.violations.size() == 1);
    CHECK(mentions(check.violations, "multiplicity cap"));
    CHECK(mentions(check.violations, "1/10"));
}

TEST_CASE("state validation catches a failed main inequality at the boundary") {
    // a = b = c = 1, m = 0: the degree identity holds with an empty residual,
    // but m + a + b = 2 does not exceed c + 1 = 2.
    TriangleState s;
    s.a = s.b = s.c = Rational(1);
    s.m = Rational(0);
    StateCheck check = validate_state(s);
    CHECK_FALSE(check.pass);
    REQUIRE(check.violations.size() == 1);
    CHECK(mentions(check.violations, "main inequality"));
    CHECK(mentions(check.violations, "slack 0"));
}

TEST_CASE("state validation reports identity drift and bad component data") {
    TriangleState s = seed_state();
    s.omega = {OmegaComponent{Rational(1), 2}}; // total 2 + 8/5 = 18/5
    StateCheck check = validate_state(s);
    CHECK_FALSE(check.pass);
    CHECK(mentions(check.violations, "degree identity"));
    CHECK(mentions(check.violations, "3/5"));

    TriangleState bad = seed_state();
    bad.omega.push_back(OmegaComponent{Rational(0), 1});
    CHECK(mentions(validate_state(bad).violations, "e > 0"));

    TriangleState neg = seed_state();
    neg.m = Rational(-1, 4);
    CHECK(mentions(validate_state(neg).violations, "m must be >= 0"));

    TriangleState big = seed_state();
    big.a = Rational(6, 5);
    CHECK(mentions(validate_state(big).violations, "[0, 1]"));
}

TEST_CASE("one involution step on the seed state") {
    GeiserStep step = geiser_step(seed_state(), Rational(1, 5));
    CHECK(step.decrement == Rational(9, 10));
    CHECK(step.next.a == Rational(4, 5));
    CHECK(step.next.b == Rational(4, 5));
    CHECK(step.next.c == Rational(9, 10));
    CHECK(step.next.m == Rational(1, 5));
    CHECK(step.next.omega_degree() == Rational(1, 2));
    REQUIRE(step.next.omega.size() == 1);
    CHECK(step.next.omega[0].d == 1);
}

TEST_CASE("involution step rejects bad inputs") {
    TriangleState invalid = seed_state();
    invalid.m = Rational(1, 2);
    CHECK_THROWS_AS(geiser_step(invalid, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(geiser_step(seed_state(), Rational(-1, 3)), std::invalid_argument);
}

TEST_CASE("a step can exhaust the residual exactly") {
    TriangleState s;
    s.a = s.b = Rational(1);
    s.c = Rational(0);
    s.m = Rational(0);
    s.omega = {OmegaComponent{Rational(1), 1}};
    REQUIRE(validate_state(s).pass);
    GeiserStep step = geiser_step(s, Rational(0));
    CHECK(step.decrement == Rational(1));
    CHECK(step.next.omega.empty());
    CHECK(step.next.omega_degree() == Rational(0));
    // The successor keeps the degree identity but loses the main inequality.
    StateCheck next_check = validate_state(step.next);
    CHECK_FALSE(next_check.pass);
    CHECK(mentions(next_check.violations, "main inequality"));
}

TEST_CASE("descent from the seed state hits the discreteness floor at once") {
    std::vector<Rational> oracle(5, Rational(3, 10));
    DescentTrace trace = run_descent(seed_state(), oracle, 5);
    CHECK(trace.terminal == DescentTerminal::contradiction);
    CHECK(trace.states.size() == 1);
    CHECK(trace.decrements.empty());
    CHECK(trace.certificate.find("1/2") != std::string::npos);
    CHECK(trace.certificate.find("floor 7/5") != std::string::npos);
}

TEST_CASE("descent records strictly decreasing residual degrees until the step limit") {
    TriangleState s;
    s.a = s.b = Rational(1, 2);
    s.c = Rational(0);
    s.m = Rational(1, 2);
    s.omega = {OmegaComponent{Rational(1, 5), 1}, OmegaComponent{Rational(9, 5), 1}};
    REQUIRE(validate_state(s).pass);

    DescentTrace trace = run_descent(s, {Rational(3, 4), Rational(7, 8)}, 2);
    CHECK(trace.terminal == DescentTerminal::step_limit);
    REQUIRE(trace.states.size() == 3);
    REQUIRE(trace.decrements.size() == 2);
    CHECK(trace.decrements[0] == Rational(1, 2));
    CHECK(trace.decrements[1] == Rational(1, 4));
    for (const auto& d : trace.decrements) CHECK(d.sign() > 0);
    for (size_t i = 0; i + 1 < trace.states.size(); ++i) {
        CHECK(trace.states[i + 1].omega_degree() < trace.states[i].omega_degree());
        CHECK(trace.states[i].omega_degree() - trace.states[i + 1].omega_degree() ==
              trace.decrements[i]);
        REQUIRE(validate_state(trace.states[i + 1]).pass);
    }
    CHECK(trace.states[2].omega_degree() == Rational(5, 4));
}

TEST_CASE("descent flags a successor that fails validation") {
    TriangleState s;
    s.a = s.b = Rational(1);
    s.c = Rational(0);
    s.m = Rational(0);
    s.omega = {OmegaComponent{Rational(1, 2), 2}};
    REQUIRE(validate_state(s).pass);
    DescentTrace trace = run_descent(s, {Rational(0)}, 3);
    CHECK(trace.terminal == DescentTerminal::contradiction);
    CHECK(trace.states.size() == 2);
    CHECK(trace.certificate.find("step 1") != std::string::npos);
    CHECK(trace.certificate.find("main inequality") != std::string::npos);
}

TEST_CASE("descent respects the step budget and the oracle length") {
    DescentTrace none = run_descent(seed_state(), {Rational(3, 10)}, 0);
    CHECK(none.terminal == DescentTerminal::step_limit);
    CHECK(none.states.size() == 1);

    TriangleState s;
    s.a = s.b = Rational(1, 2);
    s.c = Rational(0);
    s.m = Rational(1, 2);
    s.omega = {OmegaComponent{Rational(1, 5), 1}, OmegaComponent{Rational(9, 5), 1}};
    DescentTrace short_oracle = run_descent(s, {Rational(3, 4)}, 5);
    CHECK(short_oracle.terminal == DescentTerminal::step_limit);
    CHECK(short_oracle.states.size() == 2);
}

TEST_CASE("descent rejects unusable initial states") {
    TriangleState invalid = seed_state();
    invalid.m = Rational(1, 2);
    CHECK_THROWS_AS(run_descent(invalid, {Rational(0)}, 1), std::invalid_argument);

    TriangleState no_omega;
    no_omega.a = no_omega.b = no_omega.c = Rational(1);
    no_omega.m = Rational(3, 4);
    CHECK_THROWS_AS(run_descent(no_omega, {Rational(0)}, 1), std::invalid_argument);
}

TEST_CASE("step coefficient matches the exceptional coefficient of a blow-up") {
    // The same numbers phrased as a symbolic pair: D = a L + b M + c N + Omega
    // with L, M through P, N away from it, and Omega meeting P with
    // multiplicity 3/10 via its first component.
    auto curve = [](const std::string& label, long mult_at_p) {
        SymbolicCurve c(label, DivisorClass::integral({1}));
        c.declare_multiplicity("P", mult_at_p);
        return c;
    };
    std::vector<QTerm> terms;
    terms.push_back(QTerm{Rational(4, 5), curve("L", 1)});
    terms.push_back(QTerm{Rational(4, 5), curve("M", 1)});
    terms.push_back(QTerm{Rational(0), curve("N", 0)});
    terms.push_back(QTerm{Rational(3, 10), curve("O1", 1)});
    terms.push_back(QTerm{Rational(11, 10), curve("O2", 0)});
    QDivisor d(terms, 1);
    PulledBackPair pulled = blowup_pullback(d, "P");

    GeiserStep step = geiser_step(seed_state(), Rational(0));
    CHECK(step.next.a == seed_state().a);
    CHECK(step.next.b == seed_state().b);
    CHECK(pulled.exc_coefficient == step.next.c);
    CHECK(pulled.exc_coefficient == Rational(9, 10));
}

TEST_CASE("degree-2 component system worked examples") {
    Dp2BoundCheck over = dp2_component_bound(0, Rational(9, 8), Rational(9, 8));
    CHECK(over.s == Rational(-1));
    CHECK_FALSE(over.system_satisfied); // 9/8 * (-1) + 9/8 * 2 = 9/8 > 1
    CHECK(over.forces_m1_le_1);

    Dp2BoundCheck boundary = dp2_component_bound(0, Rational(1), Rational(1));
    CHECK(boundary.system_satisfied);

    Dp2BoundCheck untangled = dp2_component_bound(2, Rational(5, 4), Rational(1, 2));
    CHECK(untangled.s == Rational(0));
    CHECK_FALSE(untangled.system_satisfied); // reads 1 >= m2 and 1 >= m1

    CHECK(dp2_component_bound(1, Rational(1, 2), Rational(1, 2)).s == Rational(-1, 2));
    CHECK(dp2_component_bound(1, Rational(1, 2), Rational(1, 2)).system_satisfied);

    CHECK_THROWS_AS(dp2_component_bound(3, Rational(1), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(dp2_component_bound(-1, Rational(1), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(dp2_component_bound(0, Rational(-1, 2), Rational(1)), std::invalid_argument);
}

TEST_CASE("no satisfied grid point exceeds multiplicity one") {
    // Sweep [0, 2]^2 in steps of 1/16 for each k.
    for (long k = 0; k <= 2; ++k) {
        for (long i = 0; i <= 32; ++i) {
            for (long j = 0; j <= 32; ++j) {
                Rational m1(i, 16), m2(j, 16);
                Dp2BoundCheck check = dp2_component_bound(k, m1, m2);
                if (check.system_satisfied) {
                    CHECK(m1 <= Rational(1));
                    CHECK(m2 <= Rational(1));
                }
            }
        }
    }
}
