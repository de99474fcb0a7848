/// @file test_scalars.cpp
/// @brief Rational parsing/arithmetic and group-ring cyclotomic scalars.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "cherednik/errors.hpp"
#include "cherednik/rational.hpp"
#include "cherednik/scalars.hpp"

using namespace cherednik;

TEST_CASE("rational parsing accepts p and p/q and nothing else") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK_THROWS_AS(Rational::parse("abc"), StructuralError);
    CHECK_THROWS_AS(Rational::parse("1.5"), StructuralError);
    CHECK_THROWS_AS(Rational::parse(""), StructuralError);
    CHECK_THROWS_AS(Rational::parse("1/0"), StructuralError);
    CHECK_THROWS_AS(Rational::parse("1/"), StructuralError);
}

TEST_CASE("rational arithmetic and queries") {
    const Rational a(3, 4), b(-1, 6);
    CHECK((a + b).str() == "7/12");
    CHECK((a * b).str() == "-1/8");
    CHECK((a - b).str() == "11/12");
    CHECK((a / b).str() == "-9/2");
    CHECK(a.sign() == 1);
    CHECK(b.sign() == -1);
    CHECK(Rational(0).is_zero());
    CHECK(Rational(7, 7).is_one());
    CHECK(Rational(-12, 4).is_integer());
    CHECK_FALSE(b.is_integer());
    CHECK(Rational(-12, 4).to_long() == -3);
    CHECK(abs(b) == Rational(1, 6));
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(1) == Rational(1));
    CHECK(factorial(5) == Rational(120));
    CHECK(factorial(10) == Rational(3628800));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Rational>{Rational(-1), Rational(1)});
    CHECK(cyclotomic_polynomial(2) == std::vector<Rational>{Rational(1), Rational(1)});
    CHECK(cyclotomic_polynomial(3) ==
          std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
    CHECK(cyclotomic_polynomial(4) ==
          std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    CHECK(cyclotomic_polynomial(6) ==
          std::vector<Rational>{Rational(1), Rational(-1), Rational(1)});
    // phi_12 = x^4 - x^2 + 1
    CHECK(cyclotomic_polynomial(12) ==
          std::vector<Rational>{Rational(1), Rational(0), Rational(-1), Rational(0),
                                Rational(1)});
}

TEST_CASE("group ring exponent wraparound") {
    CHECK(cyclo_zeta_pow(4, 5) == cyclo_zeta_pow(4, 1));
    CHECK(cyclo_zeta_pow(4, -1) == cyclo_zeta_pow(4, 3));
    CHECK(cyclo_zeta_pow(4, 4) == cyclo_one(4));
    CHECK(cyclo_zeta_pow(1, 17) == cyclo_one(1));
}

TEST_CASE("group ring zero divisors stay explicit") {
    // n = 4: (1 + z^2)(1 - z^2) = 1 - z^4 = 0 in the group ring even though
    // neither factor is zero.
    const auto a = cyclo_add(cyclo_one(4), cyclo_zeta_pow(4, 2));
    const auto b = cyclo_sub(cyclo_one(4), cyclo_zeta_pow(4, 2));
    CHECK_FALSE(cyclo_is_zero(a));
    CHECK_FALSE(cyclo_is_zero(b));
    CHECK(cyclo_is_zero(cyclo_mul(a, b)));
    // 1 + z^2 is nonzero in the group ring but vanishes in the embedded
    // field (z^2 = -1 there).
    CHECK(cyclo_eq_embedded(a, cyclo_zero(4)));
    CHECK(cyclo_is_zero(cyclo_reduce(a)));
    CHECK_FALSE(cyclo_eq_embedded(b, cyclo_zero(4)));
}

TEST_CASE("embedded equality reduces modulo the cyclotomic polynomial") {
    // n = 3: 1 + z + z^2 = 0 embedded.
    auto s = cyclo_add(cyclo_add(cyclo_one(3), cyclo_zeta_pow(3, 1)), cyclo_zeta_pow(3, 2));
    CHECK_FALSE(cyclo_is_zero(s));
    CHECK(cyclo_eq_embedded(s, cyclo_zero(3)));
    const auto v = cyclo_rational_value(s);
    REQUIRE(v.has_value());
    CHECK(v->is_zero());
    // A plain rational keeps its value.
    const auto r = cyclo_rational_value(cyclo_from_rational(6, Rational(5, 7)));
    REQUIRE(r.has_value());
    CHECK(*r == Rational(5, 7));
    // z itself is not rational for n = 4.
    CHECK_FALSE(cyclo_rational_value(cyclo_zeta_pow(4, 1)).has_value());
}

TEST_CASE("numeric embedding of roots of unity") {
    const ComplexF i4 = cyclo_embed(cyclo_zeta_pow(4, 1));
    CHECK(std::abs(i4 - ComplexF(0.0, 1.0)) < 1e-12);
    const ComplexF z8 = cyclo_embed(cyclo_zeta_pow(8, 1));
    CHECK(std::abs(std::abs(z8) - 1.0) < 1e-12);
    CHECK(std::abs(z8 * z8 - i4) < 1e-12);
    const ComplexF m1 = cyclo_embed(cyclo_zeta_pow(2, 1));
    CHECK(std::abs(m1 - ComplexF(-1.0, 0.0)) < 1e-12);
}

TEST_CASE("group ring scaling and linearity") {
    const auto a = cyclo_add(cyclo_from_rational(5, Rational(2)), cyclo_zeta_pow(5, 3));
    const auto twice = cyclo_scale(Rational(2), a);
    CHECK(twice == cyclo_add(a, a));
    CHECK(cyclo_is_zero(cyclo_add(a, cyclo_neg(a))));
}

TEST_CASE("complex literal parsing and formatting") {
    CHECK(parse_complex("1.5") == ComplexF(1.5, 0.0));
    CHECK(parse_complex("2+3i") == ComplexF(2.0, 3.0));
    CHECK(parse_complex("2-3i") == ComplexF(2.0, -3.0));
    CHECK(parse_complex("-0.25+0.75i") == ComplexF(-0.25, 0.75));
    CHECK_THROWS_AS(parse_complex("foo"), StructuralError);
    CHECK_THROWS_AS(parse_complex(""), StructuralError);
    // Round trips through the formatter.
    for (const ComplexF z : {ComplexF(0.3, 0.7), ComplexF(-1.25, 0.0), ComplexF(0.0, -2.5)}) {
        CHECK(parse_complex(format_complex(z)) == z);
    }
}
