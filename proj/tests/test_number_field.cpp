#include "delpezzo/number_field.hpp"

#include <doctest.h>
#include <random>

using namespace delpezzo;

namespace {
FieldPtr eisenstein() {
    // Q(zeta_3): t^2 + t + 1
    return NumberField::create(RatPoly({Rational(1), Rational(1), Rational(1)}));
}
} // namespace

TEST_CASE("modulus validation") {
    // t^2 - 2 is fine; t^2 - 1 splits; t^2 - 4 splits; t^4 + 4 = (t^2-2t+2)(t^2+2t+2).
    CHECK_NOTHROW(NumberField::create(RatPoly({Rational(-2), Rational(0), Rational(1)})));
    CHECK_THROWS_AS(NumberField::create(RatPoly({Rational(-1), Rational(0), Rational(1)})),
                    std::invalid_argument);
    CHECK_THROWS_AS(NumberField::create(RatPoly({Rational(-4), Rational(0), Rational(1)})),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        NumberField::create(RatPoly({Rational(4), Rational(0), Rational(0), Rational(0), Rational(1)})),
        std::invalid_argument);
    // t^4 + 1 is irreducible over Q.
    CHECK_NOTHROW(
        NumberField::create(RatPoly({Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)})));
    // t^3 - 2 irreducible; t^3 - 8 has the root 2.
    CHECK_NOTHROW(NumberField::create(RatPoly({Rational(-2), Rational(0), Rational(0), Rational(1)})));
    CHECK_THROWS_AS(NumberField::create(RatPoly({Rational(-8), Rational(0), Rational(0), Rational(1)})),
                    std::invalid_argument);
    // Degree cap.
    CHECK_THROWS_AS(NumberField::create(RatPoly(
                        {Rational(1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)})),
                    std::invalid_argument);
}

TEST_CASE("zeta_3 arithmetic") {
    FieldPtr F = eisenstein();
    FieldElement z = F->generator();
    CHECK(z.pow(3) == F->one());
    CHECK(z * z + z + F->one() == F->zero());
    CHECK((z.pow(2)).str() == "-1 - t");
    CHECK(z.inverse() == z.pow(2));
    CHECK(z.norm() == Rational(1));
    CHECK((z - z.pow(2)).norm() == Rational(3)); // sqrt(-3) has norm 3
}

TEST_CASE("field axioms on random elements") {
    FieldPtr F = NumberField::create(
        RatPoly({Rational(3), Rational(-1), Rational(0), Rational(0), Rational(1)})); // t^4 - t + 3
    REQUIRE(is_irreducible_over_q(F->modulus()));
    std::mt19937_64 rng(23);
    auto rnd = [&] {
        std::vector<Rational> c;
        for (int i = 0; i < 4; ++i) c.push_back(Rational(Integer((long)(rng() % 21) - 10), Integer((long)(rng() % 6) + 1)));
        return F->element(c);
    };
    for (int i = 0; i < 60; ++i) {
        FieldElement a = rnd(), b = rnd(), c = rnd();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == F->one());
            CHECK(a.norm() * a.inverse().norm() == Rational(1));
        }
    }
}

TEST_CASE("rationals as a degree-1 field") {
    FieldPtr Q = NumberField::rationals();
    CHECK(Q->degree() == 1);
    FieldElement x = Q->from_rational(Rational(Integer(2), Integer(3)));
    CHECK((x * x).rational_value() == Rational(Integer(4), Integer(9)));
    CHECK(x.norm() == Rational(Integer(2), Integer(3)));
    CHECK(x.str() == "2/3");
}

TEST_CASE("mixed-field operations are rejected") {
    FieldPtr F = eisenstein();
    FieldPtr G = NumberField::create(RatPoly({Rational(-2), Rational(0), Rational(1)}));
    CHECK_THROWS_AS(F->generator() + G->generator(), std::invalid_argument);
}
