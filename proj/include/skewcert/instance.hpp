#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skewcert/bipoly.hpp"
#include "skewcert/central_poly.hpp"
#include "skewcert/fields.hpp"
#include "skewcert/series.hpp"

namespace skewcert {

// Parameters a, b, c in D defining the left ideal M = <(x-a)(x-b), y-c>
// of D[x,y].  Parameters are required exact: they define the problem, so
// nothing about them may be approximate.
template <SigmaField K>
struct InstanceParams {
    using S = SkewSeries<K>;

    std::string name;  // gf4 | gaussian | custom
    S a, b, c;
    CentralPoly<S> q;  // (x - a)(x - b), cached
    PrecisionPolicy policy;

    static InstanceParams make(std::string name, S a, S b, S c, PrecisionPolicy policy = {}) {
        policy.validate();
        if (!a.is_exact() || !b.is_exact() || !c.is_exact())
            throw InvalidArgumentError("instance parameters must be exact");
        InstanceParams p;
        p.name = std::move(name);
        p.a = std::move(a);
        p.b = std::move(b);
        p.c = std::move(c);
        using Poly = CentralPoly<S>;
        p.q = (Poly::x() - Poly::constant(p.a)) * (Poly::x() - Poly::constant(p.b));
        p.policy = policy;
        return p;
    }

    BiPoly<S> q_bipoly() const { return BiPoly<S>::from_x_poly(q); }
    BiPoly<S> y_minus_c() const { return BiPoly<S>::y() - BiPoly<S>::constant(c); }
};

// a = b = t (so -t = t in characteristic 2), c = w.
inline InstanceParams<Gf4> gf4_instance(PrecisionPolicy policy = {}) {
    using S = SkewSeries<Gf4>;
    return InstanceParams<Gf4>::make("gf4", S::t(), S::t(), S::constant(Gf4::gen()), policy);
}

// a = -t, b = t, c = i.
inline InstanceParams<GaussianRational> gaussian_instance(PrecisionPolicy policy = {}) {
    using S = SkewSeries<GaussianRational>;
    return InstanceParams<GaussianRational>::make(
        "gaussian", -S::t(), S::t(), S::constant(GaussianRational::i()), policy);
}

// Conditions (a) ab*c = c*ab and (b) c*(a+b) = (a+b)*c, both sides exact.
template <SigmaField K>
struct ConditionReport {
    SkewSeries<K> ab_c, c_ab;
    SkewSeries<K> c_sum, sum_c;
    bool a_holds = false;
    bool b_holds = false;

    bool ok() const { return a_holds && b_holds; }
};

template <SigmaField K>
ConditionReport<K> check_conditions_ab(const InstanceParams<K>& params) {
    ConditionReport<K> rep;
    SkewSeries<K> ab = params.a * params.b;
    SkewSeries<K> sum = params.a + params.b;
    rep.ab_c = ab * params.c;
    rep.c_ab = params.c * ab;
    rep.c_sum = params.c * sum;
    rep.sum_c = sum * params.c;
    rep.a_holds = (rep.ab_c == rep.c_ab);
    rep.b_holds = (rep.c_sum == rep.sum_c);
    return rep;
}

// Symbolic certification of condition (c) for the shape q = x^2 - t^2 with
// constant c: no root of q commutes with c.  The argument needs no search:
// a root f has f*f = t^2, valuation additivity forces val(f) = 1 with
// f_1 != 0, and the t-coefficients of f*c and c*f are f_1*sigma(c) and
// c*f_1, which differ exactly when sigma(c) != c.
template <SigmaField K>
struct StructuralReport {
    K c0 = K::zero();
    K sigma_c0 = K::zero();
    bool pass = false;
    std::vector<std::string> trace;
};

template <SigmaField K>
StructuralReport<K> condition_c_structural(const InstanceParams<K>& params) {
    using S = SkewSeries<K>;
    if (!(params.a + params.b).is_zero())
        throw ShapeMismatchError("quadratic is not of the shape x^2 - t^2: a + b != 0");
    if (!(params.a * params.b + S::t(2)).is_zero())
        throw ShapeMismatchError("quadratic is not of the shape x^2 - t^2: ab != -t^2");
    if (!params.c.is_constant())
        throw ShapeMismatchError("c is not a constant series");

    StructuralReport<K> rep;
    rep.c0 = params.c.coeff_at(0);
    rep.sigma_c0 = sigma(rep.c0);
    rep.pass = !(rep.sigma_c0 == rep.c0);
    rep.trace.push_back("a + b = 0 and ab = -t^2, so a root f of the quadratic satisfies f*f = t^2");
    rep.trace.push_back(
        "valuations add under multiplication, so 2*val(f) = 2: val(f) = 1 and f_1 != 0");
    rep.trace.push_back(
        "the t-coefficient of f*c is f_1*sigma(c); the t-coefficient of c*f is c*f_1");
    if (rep.pass)
        rep.trace.push_back("sigma(c) != c and f_1 != 0, so f*c != c*f: no root commutes with c");
    else
        rep.trace.push_back("sigma(c) = c, so the coefficient test is void: condition (c) fails");
    return rep;
}

// One enumerated candidate prefix (f_1, ..., f_depth) of a root of
// x^2 - t^2, stored as a series trusted below t^{depth+1}.
template <SigmaField K>
struct RootPrefix {
    SkewSeries<K> prefix;
    std::vector<K> coeffs;
    CommutationReport<K> commute;  // against c
};

// Exhaustive level-wise solution of the convolution equations
//   sum_{i+j=k, i,j>=1} f_i * sigma^i(f_j) = [k == 2],  2 <= k <= depth+1,
// which encode f*f = t^2 for f = sum_{i>=1} f_i t^i.  Every surviving
// prefix is checked against c for non-commutation.
template <SigmaField K>
std::vector<RootPrefix<K>> condition_c_enumerative(const InstanceParams<K>& params, int depth) {
    if constexpr (!FieldTraits<K>::finite) {
        (void)params;
        (void)depth;
        throw FieldNotFiniteError("root enumeration requires a finite base field");
    } else {
        using S = SkewSeries<K>;
        if (depth < 1) throw InvalidArgumentError("enumeration depth must be at least 1");
        condition_c_structural(params);  // ShapeMismatch for other quadratics

        std::vector<std::vector<K>> prefixes{{}};
        for (int level = 1; level <= depth; ++level) {
            const int k = level + 1;  // equation index settled by f_level
            std::vector<std::vector<K>> next;
            for (const auto& p : prefixes) {
                for (const K& e : FieldTraits<K>::all_elements()) {
                    auto at = [&](int idx) -> const K& {
                        return idx == level ? e : p[size_t(idx - 1)];
                    };
                    K acc = K::zero();
                    for (int i = 1; i <= k - 1; ++i) {
                        int j = k - i;
                        if (j < 1 || i > level || j > level) continue;
                        acc = acc + at(i) * sigma_pow(at(j), i);
                    }
                    K target = (k == 2) ? K::one() : K::zero();
                    if (acc == target) {
                        next.push_back(p);
                        next.back().push_back(e);
                    }
                }
            }
            prefixes = std::move(next);
        }

        std::vector<RootPrefix<K>> out;
        out.reserve(prefixes.size());
        for (auto& coeffs : prefixes) {
            RootPrefix<K> rp;
            rp.prefix = S(1, coeffs, depth + 1);
            rp.coeffs = std::move(coeffs);
            rp.commute = commutes(rp.prefix, params.c);
            out.push_back(std::move(rp));
        }
        return out;
    }
}

}  // namespace skewcert
