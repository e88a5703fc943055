#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewcert/bipoly.hpp"
#include "skewcert/central_poly.hpp"
#include "skewcert/sampling.hpp"

using namespace skewcert;

using S4 = SkewSeries<Gf4>;
using SG = SkewSeries<GaussianRational>;
using P4 = CentralPoly<S4>;
using PG = CentralPoly<SG>;
using B4 = BiPoly<S4>;

namespace {
const Gf4 w = Gf4::gen();

P4 x_minus(const S4& a) { return P4::x() - P4::constant(a); }
PG gx_minus(const SG& a) { return PG::x() - PG::constant(a); }
}  // namespace

TEST_CASE("pinned products of linear factors") {
    // Over Q(i): (x+t)(x-t) = x^2 - t^2.
    PG lhs = (PG::x() + PG::constant(SG::t())) * gx_minus(SG::t());
    PG q = PG::x() * PG::x() - PG::constant(SG::t() * SG::t());
    CHECK(lhs == q);
    // Over GF(4): (x-t)(x-t) = x^2 + t^2 = x^2 - t^2 in characteristic 2.
    P4 lhs4 = x_minus(S4::t()) * x_minus(S4::t());
    P4 q4 = P4::x() * P4::x() - P4::constant(S4::t(2));
    CHECK(lhs4 == q4);

    auto rng = trial_rng(31, 0);
    for (int n = 0; n < 20; ++n) {
        auto f = random_poly<Gf4>(rng);
        CHECK(f * P4::one() == f);
        CHECK(P4::one() * f == f);
    }
}

TEST_CASE("poly ring laws on random triples") {
    auto rng = trial_rng(31, 1);
    for (int n = 0; n < 80; ++n) {
        auto f = random_poly<Gf4>(rng, 2);
        auto g = random_poly<Gf4>(rng, 2);
        auto h = random_poly<Gf4>(rng, 2);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f + g) * h == f * h + g * h);
    }
}

TEST_CASE("pinned evaluations") {
    P4 q = P4::x() * P4::x() - P4::constant(S4::t(2));
    CHECK(q.evaluate(S4::term(w, 1)).is_zero());  // (w*t)^2 = t^2
    CHECK(x_minus(S4::t()).evaluate(S4::t()).is_zero());
    auto rng = trial_rng(32, 0);
    auto a = random_series<Gf4>(rng);
    CHECK(P4::x().evaluate(a) == a);
}

TEST_CASE("evaluation is not multiplicative: explicit witnesses") {
    // f = x, g = t*x, a = w: (fg)(a) = t*w^2 = w*t, but f(a)g(a) = w*(t*w) = t.
    P4 f = P4::x();
    P4 g = P4::monomial(S4::t(), 1);
    S4 a = S4::constant(w);
    S4 both = (f * g).evaluate(a);
    S4 split = f.evaluate(a) * g.evaluate(a);
    CHECK(both == S4::term(w, 1));
    CHECK(split == S4::t());
    CHECK(compare(both, split).verdict == Cmp::different);

    // Same shape over Q(i) with a = i: (fg)(i) = -t while f(i)g(i) = t.
    PG gf = PG::x();
    PG gg = PG::monomial(SG::t(), 1);
    SG ga = SG::constant(GaussianRational::i());
    CHECK((gf * gg).evaluate(ga) == -SG::t());
    CHECK(gf.evaluate(ga) * gg.evaluate(ga) == SG::t());
}

TEST_CASE("right division: pinned cases") {
    P4 q = P4::x() * P4::x() - P4::constant(S4::t(2));
    auto res = divide_right(q, x_minus(S4::t()));
    CHECK(res.quotient == P4::x() + P4::constant(S4::t()));
    CHECK(res.remainder.is_zero());

    auto self = divide_right(q, q);
    CHECK(self.quotient == P4::one());
    CHECK(self.remainder.is_zero());

    CHECK_THROWS_AS(divide_right(q, P4::zero()), DivisionByZeroError);
}

TEST_CASE("division invariant on random pairs, exact route") {
    auto rng = trial_rng(33, 0);
    for (int n = 0; n < 400; ++n) {
        auto f = random_poly<Gf4>(rng, 4);
        auto d = random_sharp_divisor<Gf4>(rng, 2);
        auto [quot, rem] = divide_right(f, d);
        CHECK(quot * d + rem == f);  // exact: sharp divisors never truncate
        CHECK(rem.degree() < d.degree());
    }
    auto rng2 = trial_rng(33, 1);
    for (int n = 0; n < 100; ++n) {
        SeriesShape small{-1, 1, 2};
        auto f = random_poly<GaussianRational>(rng2, 3, small);
        auto d = random_sharp_divisor<GaussianRational>(rng2, 2, small);
        auto [quot, rem] = divide_right(f, d);
        CHECK(quot * d + rem == f);
        CHECK(rem.degree() < d.degree());
    }
}

TEST_CASE("division with a truncating divisor is correct to precision") {
    auto rng = trial_rng(33, 2);
    PrecisionPolicy pol;
    for (int n = 0; n < 150; ++n) {
        auto f = random_poly<Gf4>(rng, 3);
        P4 d;
        do {
            d = random_poly<Gf4>(rng, 2);
        } while (d.is_zero() || !d.leading().definitely_nonzero() || d.leading().is_single_term());
        auto [quot, rem] = divide_right(f, d, pol);
        CHECK(rem.degree() < d.degree());
        auto cmp = poly_compare(quot * d + rem, f);
        CHECK(cmp.verdict != Cmp::different);
    }
}

TEST_CASE("remainder-evaluation law") {
    auto rng = trial_rng(34, 0);
    for (int n = 0; n < 200; ++n) {
        auto f = random_poly<Gf4>(rng, 4);
        auto v = random_series<Gf4>(rng);
        auto rem = divide_right(f, x_minus(v)).remainder;
        CHECK(rem.coeff(0) == f.evaluate(v));
    }
}

TEST_CASE("right-factor test: pinned cases") {
    P4 q = P4::x() * P4::x() - P4::constant(S4::t(2));
    CHECK(is_right_factor(q, S4::t()));
    CHECK(!is_right_factor(q, S4::constant(w)));
    auto rng = trial_rng(35, 0);
    auto v = random_series<Gf4>(rng);
    CHECK(is_right_factor(x_minus(v), v));
}

TEST_CASE("product formula: pinned branches") {
    // g(a) = 0 branch: f = x - w, g = x - t, a = t.
    auto rep0 = product_formula_check(x_minus(S4::constant(w)), x_minus(S4::t()), S4::t());
    CHECK(rep0.g_vanishes);
    CHECK(rep0.lhs.is_zero());
    CHECK(rep0.verdict.verdict == Cmp::equal);

    // Constant-coefficient pair at a = w*t.
    auto rep1 = product_formula_check(x_minus(S4::constant(w)),
                                      x_minus(S4::constant(w + Gf4::one())),
                                      S4::term(w, 1));
    CHECK(!rep1.g_vanishes);
    CHECK(rep1.verdict.verdict == Cmp::equal);
    if (rep1.conjugate_route) CHECK(rep1.conjugate_route->verdict != Cmp::different);

    // f = 1: both sides are g(a).
    auto rng = trial_rng(36, 0);
    auto g = random_poly<Gf4>(rng);
    auto a = random_series<Gf4>(rng);
    auto rep2 = product_formula_check(P4::one(), g, a);
    CHECK(rep2.verdict.verdict != Cmp::different);
    CHECK(compare(rep2.lhs, g.evaluate(a)).verdict != Cmp::different);
}

TEST_CASE("product formula on random triples, both branches") {
    auto rng = trial_rng(36, 1);
    for (int n = 0; n < 300; ++n) {
        auto f = random_poly<Gf4>(rng, 3);
        auto a = random_series<Gf4>(rng);
        P4 g;
        if (n % 3 == 0) {
            g = random_poly<Gf4>(rng, 2) * x_minus(a);  // plant g(a) = 0
            if (g.is_zero()) continue;
            CHECK(g.evaluate(a).is_zero());
        } else {
            g = random_poly<Gf4>(rng, 2);
        }
        auto rep = product_formula_check(f, g, a);
        CHECK(rep.verdict.verdict == Cmp::equal);  // all inputs exact
        if (rep.conjugate_route) CHECK(rep.conjugate_route->verdict != Cmp::different);
    }
}

TEST_CASE("bezout with a linear factor: pinned cases") {
    PrecisionPolicy pol;
    P4 q = P4::x() * P4::x() - P4::constant(S4::t(2));

    auto wit = bezout_with_linear(q, S4::constant(w), pol);
    REQUIRE(wit.has_value());
    // q(w) = w^2 - t^2.
    CHECK(wit->q_at_v == S4::constant(w * w) - S4::t(2));
    CHECK(wit->expansion.verdict != Cmp::different);
    CHECK(wit->p1.degree() == 0);
    CHECK(wit->p2.degree() == 1);

    CHECK(!bezout_with_linear(q, S4::t(), pol).has_value());  // root: not coprime

    // Linear q = x - u against v with u - v invertible.
    S4 u = S4::term(w, 1);
    S4 v = S4::constant(Gf4::one());
    auto lin = bezout_with_linear(x_minus(u), v, pol);
    REQUIRE(lin.has_value());
    CHECK(lin->expansion.verdict != Cmp::different);

    CHECK_THROWS_AS(bezout_with_linear(P4::monomial(S4::term(w, 1), 1), v, pol),
                    InvalidArgumentError);  // not monic
}

TEST_CASE("bezout expansion verdicts on random monic quadratics") {
    PrecisionPolicy pol;
    auto rng = trial_rng(37, 0);
    int engaged = 0;
    for (int n = 0; n < 200; ++n) {
        P4 q = (P4::x() + P4::constant(random_series<Gf4>(rng))) *
                   (P4::x() + P4::constant(random_series<Gf4>(rng))) ;
        auto v = random_series<Gf4>(rng);
        S4 qv = q.evaluate(v);
        if (!qv.definitely_nonzero() && !qv.is_zero()) continue;
        auto wit = bezout_with_linear(q, v, pol);
        if (!wit) {
            CHECK(qv.is_zero());
            continue;
        }
        ++engaged;
        CHECK(wit->expansion.verdict != Cmp::different);
        if (qv.is_single_term()) CHECK(wit->expansion.verdict == Cmp::equal);
    }
    CHECK(engaged > 100);
}

TEST_CASE("bipoly arithmetic and y-division") {
    auto rng = trial_rng(38, 0);
    S4 c = S4::constant(w);

    // y = 1*(y - c) + c.
    auto base = divide_y(B4::y(), c);
    CHECK(base.quotient == B4::one());
    CHECK(base.remainder == P4::constant(c));

    B4 ymc = B4::y() - B4::constant(c);
    for (int n = 0; n < 150; ++n) {
        auto f = random_bipoly<Gf4>(rng, 3, 2);
        auto [g, h] = divide_y(f, c);
        CHECK(h.degree() <= f.x_degree());
        CHECK(g * ymc + B4::from_x_poly(h) == f);  // monic divisor: exact
        CHECK(g.y_degree() == std::max(f.y_degree() - 1, -1));
    }
}

TEST_CASE("bipoly ring laws") {
    auto rng = trial_rng(38, 1);
    for (int n = 0; n < 60; ++n) {
        auto f = random_bipoly<Gf4>(rng, 2, 1);
        auto g = random_bipoly<Gf4>(rng, 2, 1);
        auto h = random_bipoly<Gf4>(rng, 2, 1);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(B4::x() * B4::y() == B4::y() * B4::x());  // central variables
    }
}
