#pragma once

#include <optional>
#include <string>
#include <variant>

#include "skewcert/bipoly.hpp"
#include "skewcert/instance.hpp"

namespace skewcert {

// The reduced coset representative u*x - v of f modulo M.
template <SigmaField K>
struct NormalFormLinear {
    SkewSeries<K> u, v;

    bool is_zero() const { return u.is_zero() && v.is_zero(); }

    friend bool operator==(const NormalFormLinear&, const NormalFormLinear&) = default;
};

// Both division stages with their quotients: f = g*(y-c) + h and
// h = p*q + (u*x - v).  The quotients are what witnesses are made of.
template <SigmaField K>
struct NormalFormData {
    NormalFormLinear<K> nf;
    BiPoly<SkewSeries<K>> g;
    CentralPoly<SkewSeries<K>> h;
    CentralPoly<SkewSeries<K>> p;
};

// Two-stage reduction: divide by y - c in (D[x])[y], then right-divide the
// y-free remainder by q.  Both divisors are monic, so the reduction of an
// exact input is exact.
template <SigmaField K>
NormalFormData<K> normal_form_full(const BiPoly<SkewSeries<K>>& f,
                                   const InstanceParams<K>& params) {
    NormalFormData<K> out;
    auto ydiv = divide_y(f, params.c);
    out.g = ydiv.quotient;
    out.h = ydiv.remainder;
    auto xdiv = divide_right(out.h, params.q, params.policy);
    out.p = xdiv.quotient;
    out.nf.u = xdiv.remainder.coeff(1);
    out.nf.v = -xdiv.remainder.coeff(0);
    return out;
}

template <SigmaField K>
NormalFormLinear<K> normal_form(const BiPoly<SkewSeries<K>>& f, const InstanceParams<K>& params) {
    return normal_form_full(f, params).nf;
}

enum class WitnessKind { member, unit_remainder, commutator_root, euclid_coprime };

inline const char* witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::member: return "member";
        case WitnessKind::unit_remainder: return "unit-remainder";
        case WitnessKind::commutator_root: return "commutator-root";
        case WitnessKind::euclid_coprime: return "euclid-coprime";
    }
    return "?";
}

// Asserts f = g1*q + g2*(y-c).
template <SigmaField K>
struct MemberWitness {
    BiPoly<SkewSeries<K>> g1, g2;
};

// Asserts h0*q + h1*(y-c) + h2*f = 1, proving M + D[x,y]*f = D[x,y].
template <SigmaField K>
struct UnitWitness {
    WitnessKind kind = WitnessKind::unit_remainder;
    BiPoly<SkewSeries<K>> h0, h1, h2;
    std::optional<SkewSeries<K>> kappa;  // c*w - w*c, commutator-root only
    std::optional<SkewSeries<K>> root;   // w = u^{-1}*v, when u != 0
};

template <SigmaField K>
using Witness = std::variant<MemberWitness<K>, UnitWitness<K>>;

// Outcome of re-expanding a witness against its target.  ok means no
// conclusive mismatch on any trusted coefficient; exact means every compared
// slot was exact (always the case for member witnesses of exact inputs,
// while unit witnesses go through series inverses and may carry truncation).
struct ExpansionCheck {
    bool ok = false;
    bool exact = false;
    std::optional<int> trusted_to;
    std::string detail;
};

template <SigmaField K>
ExpansionCheck check_against(const BiPoly<SkewSeries<K>>& got, const BiPoly<SkewSeries<K>>& want) {
    auto rep = bipoly_compare(got, want);
    ExpansionCheck out;
    out.ok = rep.verdict != Cmp::different;
    out.exact = rep.verdict == Cmp::equal;
    out.trusted_to = rep.trusted_to;
    if (rep.verdict == Cmp::different) {
        out.detail = "mismatch at x^" + std::to_string(rep.x_slot) + " y^" +
                     std::to_string(rep.y_slot) + ", exponent " +
                     std::to_string(rep.detail.exponent.value_or(0)) + ": " +
                     rep.detail.lhs.str() + " vs " + rep.detail.rhs.str();
    }
    return out;
}

template <SigmaField K>
ExpansionCheck verify_member_witness(const BiPoly<SkewSeries<K>>& f,
                                     const InstanceParams<K>& params,
                                     const MemberWitness<K>& w) {
    return check_against(w.g1 * params.q_bipoly() + w.g2 * params.y_minus_c(), f);
}

template <SigmaField K>
ExpansionCheck verify_unit_witness(const BiPoly<SkewSeries<K>>& f,
                                   const InstanceParams<K>& params,
                                   const UnitWitness<K>& w) {
    using B = BiPoly<SkewSeries<K>>;
    B sum = w.h0 * params.q_bipoly() + w.h1 * params.y_minus_c() + w.h2 * f;
    return check_against(sum, B::one());
}

template <SigmaField K>
ExpansionCheck verify_witness(const BiPoly<SkewSeries<K>>& f, const InstanceParams<K>& params,
                              const Witness<K>& w) {
    if (const auto* m = std::get_if<MemberWitness<K>>(&w))
        return verify_member_witness(f, params, *m);
    return verify_unit_witness(f, params, std::get<UnitWitness<K>>(w));
}

template <SigmaField K>
struct Decision {
    bool member = false;
    WitnessKind kind = WitnessKind::member;
    NormalFormLinear<K> nf;
    Witness<K> witness;
    ExpansionCheck verification;
};

// Total decision of f mod M with a verifiable certificate either way.
//
// Normal form u*x - v.  (0,0) membership is immediate from the divisions.
// Otherwise a unit combination h0*q + h1*(y-c) + h2*f = 1 is assembled:
//   u = 0:      left-scale by (-v)^{-1}.
//   u != 0:     left-scale by u^{-1} so the representative becomes the monic
//               x - w with w = u^{-1}*v (not u*x - u^{-1}*v), and
//     q(w) != 0:  Bezout coprimality of q and x - w;
//     q(w) = 0:   the commutator identity (y-c)(x-w) - (x-w)(y-c) = c*w - w*c,
//                 whose right side must be a unit: it is conclusively nonzero
//                 for any root of q when the parameters are admissible, and a
//                 root with c*w = w*c exactly is a ConditionViolation, not a
//                 bug.  The identity holds for every constant w, so it also
//                 settles candidates whose root status is below precision as
//                 long as the commutator is conclusive.
template <SigmaField K>
Decision<K> decide_membership(const BiPoly<SkewSeries<K>>& f, const InstanceParams<K>& params) {
    using S = SkewSeries<K>;
    using B = BiPoly<S>;
    using Poly = CentralPoly<S>;
    const PrecisionPolicy& pol = params.policy;

    NormalFormData<K> data = normal_form_full(f, params);
    const S& u = data.nf.u;
    const S& v = data.nf.v;

    Decision<K> dec;
    dec.nf = data.nf;

    if (data.nf.is_zero()) {
        MemberWitness<K> wit{B::from_x_poly(data.p), data.g};
        dec.member = true;
        dec.kind = WitnessKind::member;
        dec.verification = verify_member_witness(f, params, wit);
        dec.witness = std::move(wit);
        if (!dec.verification.ok)
            throw InternalError("member witness failed to expand back to the input");
        return dec;
    }

    UnitWitness<K> wit;
    if (u.is_zero()) {
        if (!v.definitely_nonzero())
            throw PrecisionExhaustedError("normal form is indistinguishable from zero");
        // -v = f - g*(y-c) - p*q, so scaling by s = (-v)^{-1} yields 1.
        S s = (-v).inverse(pol);
        wit.kind = WitnessKind::unit_remainder;
        wit.h0 = B::from_x_poly(-(s * data.p));
        wit.h1 = -(s * data.g);
        wit.h2 = B::constant(s);
    } else if (!u.definitely_nonzero()) {
        throw PrecisionExhaustedError("normal form leading coefficient is untrusted");
    } else {
        S uinv = u.inverse(pol);
        S w = uinv * v;
        // x - w = u^{-1}*f - (u^{-1}g)*(y-c) - (u^{-1}p)*q
        Poly up = uinv * data.p;
        B ug = uinv * data.g;
        S qw = params.q.evaluate(w);
        wit.root = w;
        if (qw.definitely_nonzero()) {
            auto bez = bezout_with_linear(params.q, w, pol);
            if (!bez) throw InternalError("Bezout refused a conclusively nonzero q(w)");
            wit.kind = WitnessKind::euclid_coprime;
            wit.h0 = B::from_x_poly(bez->p1 - bez->p2 * up);
            wit.h1 = -(B::from_x_poly(bez->p2) * ug);
            wit.h2 = B::from_x_poly(bez->p2 * uinv);
        } else {
            S kappa = params.c * w - w * params.c;
            if (kappa.definitely_nonzero()) {
                S kinv = kappa.inverse(pol);
                B front = kinv * params.y_minus_c();
                B xw = B::x() - B::constant(w);
                wit.kind = WitnessKind::commutator_root;
                wit.kappa = kappa;
                wit.h0 = -(front * B::from_x_poly(up));
                wit.h1 = -(front * ug) - (kinv * xw);
                wit.h2 = front * uinv;
            } else if (kappa.is_zero() && qw.is_zero()) {
                throw ConditionViolationError(
                    "a root of the quadratic commutes with c: the parameters violate condition (c)");
            } else {
                throw PrecisionExhaustedError(
                    "root candidate cannot be separated from the commuting case at this precision");
            }
        }
    }

    dec.member = false;
    dec.kind = wit.kind;
    dec.verification = verify_unit_witness(f, params, wit);
    dec.witness = std::move(wit);
    if (!dec.verification.ok)
        throw InternalError("unit witness failed to expand to 1");
    return dec;
}

}  // namespace skewcert
