#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewcert/fields.hpp"
#include "skewcert/quaternion.hpp"
#include "skewcert/rational.hpp"
#include "skewcert/sampling.hpp"

using namespace skewcert;

namespace {

// Independent GF(4) multiplication: carryless product of GF(2) polynomials,
// reduced modulo w^2 + w + 1.  Exercises none of the Gf4 internals.
uint8_t gf2poly_mulmod(uint8_t a, uint8_t b) {
    unsigned p = 0;
    for (int k = 0; k < 2; ++k)
        if (b & (1u << k)) p ^= unsigned(a) << k;
    for (int d = 2; d >= 0; --d)
        if (p & (1u << (d + 2))) p ^= 0b111u << d;
    return uint8_t(p & 3u);
}

}  // namespace

TEST_CASE("gf4 multiplication table matches the GF(2)[w] oracle") {
    for (Gf4 a : Gf4::all())
        for (Gf4 b : Gf4::all())
            CHECK((a * b).bits() == gf2poly_mulmod(a.bits(), b.bits()));
}

TEST_CASE("gf4 pinned values") {
    Gf4 w = Gf4::gen();
    Gf4 w1 = w + Gf4::one();
    CHECK(w * w == w1);
    CHECK(w * w1 == Gf4::one());
    CHECK(w.inverse() == w1);
    CHECK(w1.inverse() == w);
    CHECK(w * w * w == Gf4::one());  // cube root of unity
    CHECK(Gf4::parse("w+1") == w1);
    CHECK(w1.str() == "w+1");
}

TEST_CASE("gf4 field axioms, exhaustive") {
    for (Gf4 a : Gf4::all())
        for (Gf4 b : Gf4::all()) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            for (Gf4 c : Gf4::all()) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
        }
    for (Gf4 a : Gf4::all()) {
        CHECK(a + a == Gf4::zero());  // characteristic 2
        if (!a.is_zero()) CHECK(a * a.inverse() == Gf4::one());
    }
    CHECK_THROWS_AS(Gf4::zero().inverse(), DivisionByZeroError);
}

TEST_CASE("gf4 frobenius is the order-two automorphism") {
    Gf4 w = Gf4::gen();
    CHECK(sigma(w) == w + Gf4::one());
    CHECK(sigma(w + Gf4::one()) == w);
    CHECK(sigma(Gf4::one()) == Gf4::one());
    for (Gf4 a : Gf4::all()) {
        CHECK(sigma(a) == a * a);
        CHECK(sigma(sigma(a)) == a);
        CHECK(sigma_pow(a, -1) == sigma(a));
        CHECK(sigma_pow(a, 2) == a);
        for (Gf4 b : Gf4::all()) {
            CHECK(sigma(a + b) == sigma(a) + sigma(b));
            CHECK(sigma(a * b) == sigma(a) * sigma(b));
        }
    }
}

TEST_CASE("rational parsing and formatting round-trip") {
    CHECK(parse_rational("7/4") == Rational(7, 4));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(format_rational(Rational(-6, 4)) == "-3/2");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK(parse_rational(format_rational(Rational(22, 7))) == Rational(22, 7));
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("exact rational square roots") {
    CHECK(exact_rational_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(exact_rational_sqrt(Rational(0)) == Rational(0));
    CHECK(!exact_rational_sqrt(Rational(2)).has_value());
    CHECK(!exact_rational_sqrt(Rational(-1)).has_value());
    CHECK(!exact_rational_sqrt(Rational(8)).has_value());
    CHECK(exact_rational_sqrt(Rational(144)) == Rational(12));
}

TEST_CASE("gaussian rationals form a field with conjugation of order two") {
    auto i = GaussianRational::i();
    CHECK(i * i == -GaussianRational::one());
    CHECK(sigma(i) == -i);
    CHECK(sigma(sigma(i)) == i);

    auto rng = trial_rng(11, 0);
    for (int n = 0; n < 200; ++n) {
        auto a = random_element<GaussianRational>(rng);
        auto b = random_element<GaussianRational>(rng);
        auto c = random_element<GaussianRational>(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(sigma(a * b) == sigma(a) * sigma(b));
        CHECK(sigma(a + b) == sigma(a) + sigma(b));
        CHECK(a.norm() == (a * a.conj()).re());
        if (!a.is_zero()) CHECK(a * a.inverse() == GaussianRational::one());
    }
    CHECK_THROWS_AS(GaussianRational::zero().inverse(), DivisionByZeroError);
}

TEST_CASE("quaternion unit table") {
    auto i = RationalQuaternion::i();
    auto j = RationalQuaternion::j();
    auto k = RationalQuaternion::k();
    auto one = RationalQuaternion::one();
    CHECK(i * i == -one);
    CHECK(j * j == -one);
    CHECK(k * k == -one);
    CHECK(i * j == k);
    CHECK(j * k == i);
    CHECK(k * i == j);
    CHECK(j * i == -k);
    CHECK(i * j * k == -one);
    CHECK(commutator(i, j) == k + k);
}

TEST_CASE("quaternion ring laws on random triples") {
    auto rng = trial_rng(12, 0);
    for (int n = 0; n < 200; ++n) {
        auto a = random_quaternion(rng);
        auto b = random_quaternion(rng);
        auto c = random_quaternion(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b).conj() == b.conj() * a.conj());
        CHECK((a * b).norm() == a.norm() * b.norm());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == RationalQuaternion::one());
            CHECK(a.inverse() * a == RationalQuaternion::one());
        }
        // Every quaternion satisfies x^2 - 2*Re(x)*x + |x|^2 = 0.
        auto lhs = a * a - (Rational(2) * a.r()) * a;
        CHECK(lhs == RationalQuaternion(-a.norm(), 0, 0, 0));
    }
    CHECK_THROWS_AS(RationalQuaternion::zero().inverse(), DivisionByZeroError);
}

TEST_CASE("quaternion centrality detection") {
    CHECK(RationalQuaternion(Rational(5, 2), 0, 0, 0).is_central());
    CHECK(!RationalQuaternion::i().is_central());
    auto rng = trial_rng(13, 0);
    for (int n = 0; n < 100; ++n) {
        auto a = random_quaternion(rng);
        auto b = random_quaternion(rng);
        if (a.is_central()) CHECK(commutator(a, b).is_zero());
    }
}
