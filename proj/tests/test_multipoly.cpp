#include "delpezzo/multipoly.hpp"
#include "delpezzo/poly_parse.hpp"

#include <doctest.h>

using namespace delpezzo;

TEST_CASE("fermat cubic basics") {
    FieldPtr Q = NumberField::rationals();
    auto F = parse_form("x^3 + y^3 + z^3 + w^3", Q, {"x", "y", "z", "w"});
    CHECK(F.degree() == 3);
    std::vector<FieldElement> P = {Q->from_rational(Rational(1)), Q->from_rational(Rational(1)),
                                   Q->from_rational(Rational(1)), Q->from_rational(Rational(0))};
    CHECK(F.evaluate(P).rational_value() == Rational(3));
    std::vector<FieldElement> Z = {Q->from_rational(Rational(1)), Q->from_rational(Rational(-1)),
                                   Q->from_rational(Rational(0)), Q->from_rational(Rational(0))};
    CHECK(F.evaluate(Z).is_zero());
    auto Fx = F.partial(0);
    CHECK(Fx.total_degree() == 2);
    CHECK(Fx.evaluate(Z).rational_value() == Rational(3));
}

TEST_CASE("homogeneity checks") {
    FieldPtr Q = NumberField::rationals();
    auto p = parse_polynomial("x^2*y + z^3", Q, {"x", "y", "z"});
    CHECK(p.is_homogeneous());
    auto q = parse_polynomial("x^2 + z^3", Q, {"x", "y", "z"});
    CHECK_FALSE(q.is_homogeneous());
    CHECK_THROWS_AS(HomogeneousForm(q, {"x", "y", "z"}), std::invalid_argument);
    CHECK(q.order() == 2);
    CHECK(q.homogeneous_part(3) == parse_polynomial("z^3", Q, {"x", "y", "z"}));
}

TEST_CASE("parser round-trips through str") {
    FieldPtr Q = NumberField::rationals();
    std::vector<std::string> cases = {
        "x^3 - 2*x*y^2 + 1/3*y^3",
        "x*y*z",
        "x^2 - y^2",
        "2*x - 3*y + z",
    };
    for (const auto& s : cases) {
        auto p = parse_polynomial(s, Q, {"x", "y", "z"});
        auto p2 = parse_polynomial(p.str({"x", "y", "z"}), Q, {"x", "y", "z"});
        CHECK(p == p2);
    }
}

TEST_CASE("parser handles field generator coefficients") {
    FieldPtr F = NumberField::create(RatPoly({Rational(1), Rational(1), Rational(1)}), "w3");
    auto p = parse_polynomial("z + w3*w", F, {"z", "w"});
    CHECK(p.total_degree() == 1);
    std::vector<FieldElement> at = {F->generator() * F->generator(), F->one()};
    // z = w3^2, w = 1: w3^2 + w3 = -1.
    CHECK(p.evaluate(at) == F->from_rational(Rational(-1)));
    CHECK_THROWS_AS(parse_polynomial("z + bogus*w", F, {"z", "w"}), parse_error);
}

TEST_CASE("substitution composes linear changes") {
    FieldPtr Q = NumberField::rationals();
    auto p = parse_polynomial("x^2 - y^2", Q, {"x", "y"});
    auto xpy = parse_polynomial("x + y", Q, {"x", "y"});
    auto xmy = parse_polynomial("x - y", Q, {"x", "y"});
    auto q = p.substitute({xpy, xmy}); // (x+y)^2 - (x-y)^2 = 4xy
    CHECK(q == parse_polynomial("4*x*y", Q, {"x", "y"}));
}

TEST_CASE("divide_by_variable_power") {
    FieldPtr Q = NumberField::rationals();
    auto p = parse_polynomial("x^2*y + x^3", Q, {"x", "y"});
    auto q = p.divide_by_variable_power(0, 2);
    CHECK(q == parse_polynomial("y + x", Q, {"x", "y"}));
    CHECK_THROWS_AS(p.divide_by_variable_power(1, 2), std::domain_error);
}

TEST_CASE("parse_point formats") {
    FieldPtr Q = NumberField::rationals();
    auto P = parse_point("1 : -1 : 0 : 0", Q, 4);
    CHECK(P.size() == 4);
    CHECK(P[1].rational_value() == Rational(-1));
    CHECK_THROWS_AS(parse_point("1 : 2", Q, 3), parse_error);
}
