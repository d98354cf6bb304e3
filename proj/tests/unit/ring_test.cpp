#include <doctest.h>

#include <cmath>
#include <random>

#include "qdet/config.hpp"
#include "qdet/matrix.hpp"
#include "qdet/quaternion.hpp"
#include "qdet/rational.hpp"
#include "qdet/ring.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace qdet;
using fixtures::frac;
using fixtures::q;

static_assert(RingElement<Rational>);
static_assert(RingElement<ExactQuaternion>);
static_assert(RingElement<FloatQuaternion>);
static_assert(RingElement<Mat<ExactQuaternion>>);
static_assert(RingElement<Mat<Mat<ExactQuaternion>>>);

namespace {
const ExactQuaternion one = q(1, 0, 0, 0);
const ExactQuaternion i = q(0, 1, 0, 0);
const ExactQuaternion j = q(0, 0, 1, 0);
const ExactQuaternion k = q(0, 0, 0, 1);
}  // namespace

TEST_CASE("rational canonical form") {
    Rational r(6, 4);
    CHECK(r.numerator() == 3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), ZeroDivision);
}

TEST_CASE("rational arithmetic stays exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
    CHECK(Rational(2, 3) - Rational(2, 3) == Rational(0));
    CHECK(-(Rational(5, 4)) == Rational(-5, 4));
    CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), ZeroDivision);
    CHECK(*Rational(-7, 3).try_invert() == Rational(-3, 7));
    CHECK_FALSE(Rational(0).try_invert());
}

TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("-1033/84") == Rational(-1033, 84));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational(-3, 2).to_string() == "-3/2");
    CHECK(Rational(5).to_string() == "5");
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a/2"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("quaternion unit rules") {
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(j * k == i);
    CHECK(k * j == -i);
    CHECK(k * i == j);
    CHECK(i * k == -j);
    CHECK(i * i == -one);
    CHECK(j * j == -one);
    CHECK(k * k == -one);
}

TEST_CASE("quaternion multiplicative identity") {
    gen::Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        ExactQuaternion p = gen::rnd_quat(rng);
        CHECK(one * p == p);
        CHECK(p * one == p);
    }
}

TEST_CASE("quaternion inverse matches the worked diagonal blocks") {
    const ExactQuaternion m11 = i + k;
    const ExactQuaternion m11_inv = q(0, frac(-1, 2), 0, frac(-1, 2));
    CHECK(m11.invert() == m11_inv);
    CHECK(m11 * m11_inv == one);
    CHECK(m11_inv * m11 == one);

    const ExactQuaternion m33 = q(2, 1, 0, -1);
    CHECK(m33.invert() == q(frac(1, 3), frac(-1, 6), 0, frac(1, 6)));

    CHECK(one.invert() == one);
    CHECK_THROWS_AS(ExactQuaternion().invert(), ZeroDivision);
    CHECK_FALSE(ExactQuaternion().try_invert());
}

TEST_CASE("quaternion norm") {
    CHECK(ExactQuaternion().abs() == 0.0);
    CHECK((i + k).abs() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    const ExactQuaternion delta = q(frac(10, 21), frac(1, 7), frac(-11, 21), frac(20, 21));
    CHECK(delta.abs() == doctest::Approx(std::sqrt(630.0) / 21.0).epsilon(1e-14));
    // rounds to 1.1952 at four digits
    CHECK(std::round(delta.abs() * 1e4) / 1e4 == doctest::Approx(1.1952));
}

TEST_CASE("quaternion products: associative, noncommutative, norm-multiplicative") {
    CHECK(i * j != j * i);
    gen::Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        ExactQuaternion p = gen::rnd_quat(rng);
        ExactQuaternion r = gen::rnd_quat(rng);
        ExactQuaternion s = gen::rnd_quat(rng);
        CHECK((p * r) * s == p * (r * s));
        CHECK((p + r) * s == p * s + r * s);
        CHECK(s * (p + r) == s * p + s * r);
        CHECK((p * r).norm_sq() == p.norm_sq() * r.norm_sq());
    }
}

TEST_CASE("quaternion two-sided inverse on random nonzero values") {
    gen::Rng rng(13);
    for (int t = 0; t < 50; ++t) {
        ExactQuaternion p = gen::rnd_nonzero_quat(rng);
        auto inv = p.try_invert();
        REQUIRE(inv);
        CHECK(p * *inv == one);
        CHECK(*inv * p == one);
    }
}

TEST_CASE("float quaternions honor the zero tolerance") {
    const double saved = float_tolerance();
    set_float_tolerance(1e-9);
    FloatQuaternion tiny(1e-12, 0.0, 0.0, 0.0);
    CHECK(tiny.is_zero());
    CHECK_FALSE(tiny.try_invert());
    CHECK_THROWS_AS(tiny.invert(), ZeroDivision);
    FloatQuaternion big(1e-6, 0.0, 0.0, 0.0);
    CHECK_FALSE(big.is_zero());
    REQUIRE(big.try_invert());
    set_float_tolerance(1e-3);
    CHECK(big.is_zero());
    set_float_tolerance(saved);
}

TEST_CASE("float quaternion norm multiplicativity within 1e-12 relative") {
    gen::Rng rng(17);
    for (int t = 0; t < 50; ++t) {
        FloatQuaternion p = to_float(gen::rnd_quat(rng));
        FloatQuaternion r = to_float(gen::rnd_quat(rng));
        const double lhs = (p * r).abs();
        const double rhs = p.abs() * r.abs();
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, rhs));
    }
}
