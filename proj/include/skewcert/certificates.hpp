#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "skewcert/membership.hpp"
#include "skewcert/sampling.hpp"

namespace skewcert {

// Properness of M via a nonzero quotient module instead of an argument
// inside the rational function skew field: V = D*1~ + D*x~ is D[x]/D[x]q as
// a left D-module, x acts through the companion matrix of q, y acts by right
// multiplication with c.  Conditions (a) and (b) make the two actions
// commute, so V is a left D[x,y]-module; both generators of M kill 1~, so
// M annihilates a nonzero module and cannot be the whole ring.
//
// Vectors are rows (d0, d1) = d0*1~ + d1*x~; an action table A applies as
// (v*A)_j = sum_i v_i * A[i][j] with the module scalars kept on the left.
template <SigmaField K>
struct PropernessCertificate {
    static constexpr int module_dimension = 2;

    using S = SkewSeries<K>;
    using Vec = std::array<S, 2>;
    using Mat = std::array<Vec, 2>;

    Mat x_action;  // [[0, 1], [-ab, a+b]]
    Mat y_action;  // [[c, 0], [0, c]]
    bool qc_commutes = false;
    bool actions_commute = false;
    bool scalars_commute = false;
    bool q_annihilates = false;
    bool y_annihilates = false;
    std::string first_violation;  // empty iff the certificate holds

    bool ok() const { return first_violation.empty(); }
};

template <SigmaField K>
PropernessCertificate<K> properness_certificate(const InstanceParams<K>& params,
                                                std::uint64_t seed = 2026) {
    using S = SkewSeries<K>;
    using Cert = PropernessCertificate<K>;
    using Vec = typename Cert::Vec;
    Cert cert;

    const S ab = params.a * params.b;
    const S sum = params.a + params.b;
    const S& c = params.c;
    cert.x_action = {Vec{S::zero(), S::one()}, Vec{-ab, sum}};
    cert.y_action = {Vec{c, S::zero()}, Vec{S::zero(), c}};

    auto apply = [](const typename Cert::Mat& m, const Vec& v) {
        return Vec{v[0] * m[0][0] + v[1] * m[1][0], v[0] * m[0][1] + v[1] * m[1][1]};
    };
    auto scale = [](const S& d, const Vec& v) { return Vec{d * v[0], d * v[1]}; };
    auto sub = [](const Vec& l, const Vec& r) { return Vec{l[0] - r[0], l[1] - r[1]}; };
    auto vec_zero = [](const Vec& v) { return v[0].is_zero() && v[1].is_zero(); };
    auto fail = [&](const std::string& what) {
        if (cert.first_violation.empty()) cert.first_violation = what;
    };

    cert.qc_commutes = (params.q * c == c * params.q);
    if (!cert.qc_commutes) fail("q*c != c*q in D[x]");

    const Vec e0{S::one(), S::zero()};
    const Vec e1{S::zero(), S::one()};

    auto rng = trial_rng(seed, 0);
    cert.actions_commute = true;
    cert.scalars_commute = true;
    auto probe_commute = [&](const Vec& v) {
        Vec xy = apply(cert.x_action, apply(cert.y_action, v));
        Vec yx = apply(cert.y_action, apply(cert.x_action, v));
        if (!vec_zero(sub(xy, yx))) {
            cert.actions_commute = false;
            fail("x-action and y-action do not commute on the module");
        }
    };
    probe_commute(e0);
    probe_commute(e1);
    for (int n = 0; n < 16; ++n) {
        Vec v{random_series<K>(rng), random_series<K>(rng)};
        probe_commute(v);
        S d = random_series<K>(rng);
        for (const auto& m : {cert.x_action, cert.y_action}) {
            if (!vec_zero(sub(apply(m, scale(d, v)), scale(d, apply(m, v))))) {
                cert.scalars_commute = false;
                fail("an action fails to commute with left D-scalars");
            }
        }
    }

    // q acting on 1~: x^2 - (a+b)x + ab with coefficients as left scalars.
    Vec x1 = apply(cert.x_action, e0);
    Vec q1 = sub(apply(cert.x_action, x1), sub(scale(sum, x1), scale(ab, e0)));
    cert.q_annihilates = vec_zero(q1);
    if (!cert.q_annihilates) fail("q does not annihilate 1~");

    Vec yc1 = sub(apply(cert.y_action, e0), scale(c, e0));
    cert.y_annihilates = vec_zero(yc1);
    if (!cert.y_annihilates) fail("y - c does not annihilate 1~");

    return cert;
}

// The contraction M intersect D[x] equals D[x]q, which sits strictly inside
// the proper ideal D[x](x-b): certified by q = (x-a)*(x-b), by x-b and 1
// falling outside M, and by sampling the equivalence h in M <=> q | h on
// y-free polynomials (half of the samples planted as multiples of q).
template <SigmaField K>
struct ContractionReport {
    bool q_factors = false;
    bool xb_not_member = false;
    bool one_not_member = false;
    std::size_t samples = 0;
    std::size_t members = 0;
    bool equivalence_ok = false;

    bool ok() const {
        return q_factors && xb_not_member && one_not_member && equivalence_ok;
    }
};

template <SigmaField K>
ContractionReport<K> contraction_analysis(const InstanceParams<K>& params,
                                          std::size_t samples = 64,
                                          std::uint64_t seed = 2027) {
    using S = SkewSeries<K>;
    using Poly = CentralPoly<S>;
    using B = BiPoly<S>;
    ContractionReport<K> rep;

    Poly xb = Poly::x() - Poly::constant(params.b);
    rep.q_factors = ((Poly::x() - Poly::constant(params.a)) * xb == params.q);

    rep.xb_not_member = !decide_membership(B::from_x_poly(xb), params).member;
    rep.one_not_member = !decide_membership(B::one(), params).member;

    rep.equivalence_ok = true;
    SeriesShape shape{-1, 2, 3};
    for (std::size_t n = 0; n < samples; ++n) {
        auto rng = trial_rng(seed, n);
        Poly h = random_poly<K>(rng, 3, shape);
        if (n % 2 == 0) h = h * params.q;  // plant a multiple
        bool member = decide_membership(B::from_x_poly(h), params).member;
        bool divisible = divide_right(h, params.q, params.policy).remainder.is_zero();
        if (member != divisible) rep.equivalence_ok = false;
        if (member) ++rep.members;
        ++rep.samples;
    }
    return rep;
}

}  // namespace skewcert
