#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "skewcert/errors.hpp"
#include "skewcert/series.hpp"

namespace skewcert {

template <class D>
concept RingElement = requires(const D& x, const D& y) {
    { D() } -> std::same_as<D>;
    { D::zero() } -> std::same_as<D>;
    { D::one() } -> std::same_as<D>;
    { x + y } -> std::same_as<D>;
    { x - y } -> std::same_as<D>;
    { x * y } -> std::same_as<D>;
    { -x } -> std::same_as<D>;
    { x.is_zero() } -> std::same_as<bool>;
    { x.is_one() } -> std::same_as<bool>;
    { x == y } -> std::same_as<bool>;
};

// Polynomials over a division ring D in one central variable: x commutes
// with every coefficient, but coefficients multiply noncommutatively.
// Coefficients are kept on the left of x^i; index = degree.
//
// Degree is syntactic: trimming removes exactly-zero leading coefficients
// only, so an inexact coefficient that merely might vanish keeps its slot.
template <RingElement D>
class CentralPoly {
public:
    CentralPoly() = default;
    explicit CentralPoly(std::vector<D> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static CentralPoly zero() { return {}; }
    static CentralPoly one() { return constant(D::one()); }
    static CentralPoly constant(const D& c) { return monomial(c, 0); }
    static CentralPoly x() { return monomial(D::one(), 1); }
    static CentralPoly monomial(const D& c, size_t deg) {
        std::vector<D> v(deg + 1, D::zero());
        v[deg] = c;
        return CentralPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return int(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<D>& coeffs() const { return coeffs_; }

    D coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : D::zero(); }

    const D& leading() const {
        if (coeffs_.empty()) throw InvalidArgumentError("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    friend CentralPoly operator+(const CentralPoly& f, const CentralPoly& g) {
        std::vector<D> out(std::max(f.coeffs_.size(), g.coeffs_.size()), D::zero());
        for (size_t i = 0; i < out.size(); ++i) out[i] = f.coeff(i) + g.coeff(i);
        return CentralPoly(std::move(out));
    }

    friend CentralPoly operator-(const CentralPoly& f, const CentralPoly& g) { return f + (-g); }

    CentralPoly operator-() const {
        CentralPoly out = *this;
        for (D& c : out.coeffs_) c = -c;
        return out;
    }

    friend CentralPoly operator*(const CentralPoly& f, const CentralPoly& g) {
        if (f.is_zero() || g.is_zero()) return {};
        std::vector<D> out(f.coeffs_.size() + g.coeffs_.size() - 1, D::zero());
        for (size_t i = 0; i < f.coeffs_.size(); ++i)
            for (size_t j = 0; j < g.coeffs_.size(); ++j)
                out[i + j] = out[i + j] + f.coeffs_[i] * g.coeffs_[j];
        return CentralPoly(std::move(out));
    }

    friend CentralPoly operator*(const D& s, const CentralPoly& f) {
        CentralPoly out = f;
        for (D& c : out.coeffs_) c = s * c;
        out.trim();
        return out;
    }

    friend CentralPoly operator*(const CentralPoly& f, const D& s) {
        CentralPoly out = f;
        for (D& c : out.coeffs_) c = c * s;
        out.trim();
        return out;
    }

    // Left-coefficient substitution f(a) = f_n a^n + ... + f_1 a + f_0 by
    // right Horner; not a ring homomorphism in general.
    D evaluate(const D& a) const {
        D v = D::zero();
        for (size_t n = coeffs_.size(); n-- > 0;) v = v * a + coeffs_[n];
        return v;
    }

    friend bool operator==(const CentralPoly& f, const CentralPoly& g) = default;

    std::string str(const std::string& var = "x") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (size_t i = coeffs_.size(); i-- > 0;) {
            if (coeffs_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            std::string cs = coeffs_[i].str();
            if (cs.find_first_of("+-/* ", 1) != std::string::npos) cs = "(" + cs + ")";
            if (i == 0) { out += cs; continue; }
            std::string xs = i == 1 ? var : var + "^" + std::to_string(i);
            out += coeffs_[i].is_one() ? xs : cs + "*" + xs;
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<D> coeffs_;
};

// Slot-wise three-valued comparison; "different" is conclusive and reports
// the offending slot, "inconclusive" carries the weakest trusted bound seen.
template <SigmaField K>
struct PolyCompare {
    Cmp verdict = Cmp::equal;
    int slot = -1;
    CompareReport<K> detail;
    std::optional<int> trusted_to;
};

template <SigmaField K>
PolyCompare<K> poly_compare(const CentralPoly<SkewSeries<K>>& f,
                            const CentralPoly<SkewSeries<K>>& g) {
    PolyCompare<K> out;
    int top = std::max(f.degree(), g.degree());
    for (int i = 0; i <= top; ++i) {
        auto rep = compare(f.coeff(size_t(i)), g.coeff(size_t(i)));
        if (rep.verdict == Cmp::different) {
            out.verdict = Cmp::different;
            out.slot = i;
            out.detail = rep;
            return out;
        }
        if (rep.verdict == Cmp::inconclusive) {
            out.verdict = Cmp::inconclusive;
            if (rep.trusted_to && (!out.trusted_to || *rep.trusted_to < *out.trusted_to))
                out.trusted_to = rep.trusted_to;
        }
    }
    return out;
}

template <SigmaField K>
struct DivisionResult {
    CentralPoly<SkewSeries<K>> quotient;
    CentralPoly<SkewSeries<K>> remainder;
};

// Right division f = q*d + r with deg r < deg d, clearing leading terms by
// the inverse of d's leading coefficient.  Exact whenever d's lead is a
// single term (monic included); otherwise inexactness flows into r.  After
// each step the cleared slot must vanish up to precision; a conclusive
// survivor would mean broken arithmetic.
template <SigmaField K>
DivisionResult<K> divide_right(const CentralPoly<SkewSeries<K>>& f,
                               const CentralPoly<SkewSeries<K>>& d,
                               const PrecisionPolicy& policy = {}) {
    using Poly = CentralPoly<SkewSeries<K>>;
    if (d.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    const SkewSeries<K>& lead = d.leading();
    if (!lead.definitely_nonzero())
        throw PrecisionExhaustedError("divisor leading coefficient is indistinguishable from zero");
    const int k = d.degree();
    if (f.degree() < k) return {Poly::zero(), f};
    SkewSeries<K> linv = lead.is_one() ? SkewSeries<K>::one() : lead.inverse(policy);

    std::vector<SkewSeries<K>> rem(f.coeffs());
    std::vector<SkewSeries<K>> quot(size_t(f.degree() - k + 1), SkewSeries<K>::zero());
    int n = f.degree();
    while (n >= k) {
        const SkewSeries<K>& top = rem[size_t(n)];
        if (top.is_zero()) { --n; continue; }
        if (top.is_precision_zero())
            throw PrecisionExhaustedError("remainder degree undecidable at current precision");
        SkewSeries<K> c = top * linv;
        quot[size_t(n - k)] = c;
        for (int i = 0; i < k; ++i)
            rem[size_t(n - k + i)] = rem[size_t(n - k + i)] - c * d.coeff(size_t(i));
        SkewSeries<K> cleared = rem[size_t(n)] - c * lead;
        if (cleared.definitely_nonzero())
            throw InternalError("leading term failed to cancel in right division");
        rem[size_t(n)] = SkewSeries<K>::zero();
        --n;
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

// True iff x - v right-divides f, decided through both criteria: the
// substitution value f(v) and the remainder of f by (x - v).  They are equal
// by the remainder-evaluation law, which is asserted here on every call.
template <SigmaField K>
bool is_right_factor(const CentralPoly<SkewSeries<K>>& f, const SkewSeries<K>& v,
                     const PrecisionPolicy& policy = {}) {
    using Poly = CentralPoly<SkewSeries<K>>;
    SkewSeries<K> value = f.evaluate(v);
    Poly xv = Poly::x() - Poly::constant(v);
    SkewSeries<K> rem = divide_right(f, xv, policy).remainder.coeff(0);
    if (compare(value, rem).verdict == Cmp::different)
        throw InternalError("substitution and division disagree on the remainder");
    if (value.is_zero() && rem.is_zero()) return true;
    if (value.definitely_nonzero() || rem.definitely_nonzero()) return false;
    throw PrecisionExhaustedError("factor test inconclusive at current precision");
}

template <SigmaField K>
struct BezoutWitness {
    CentralPoly<SkewSeries<K>> p1, p2;  // p1*q + p2*(x - v) = 1
    SkewSeries<K> q_at_v;
    PolyCompare<K> expansion;           // re-verification of the identity
};

// For monic q with q(v) != 0: writing q = s*(x - v) + q(v), the pair
// p1 = q(v)^{-1}, p2 = -q(v)^{-1}*s satisfies p1*q + p2*(x - v) = 1.
// Returns nothing when v is a right root of q (not coprime).
template <SigmaField K>
std::optional<BezoutWitness<K>> bezout_with_linear(const CentralPoly<SkewSeries<K>>& q,
                                                   const SkewSeries<K>& v,
                                                   const PrecisionPolicy& policy = {}) {
    using Poly = CentralPoly<SkewSeries<K>>;
    if (!q.is_monic() || q.degree() < 1)
        throw InvalidArgumentError("bezout_with_linear needs a monic divisor of positive degree");
    SkewSeries<K> qv = q.evaluate(v);
    if (qv.is_zero()) return std::nullopt;
    if (!qv.definitely_nonzero())
        throw PrecisionExhaustedError("q(v) is indistinguishable from zero");

    Poly xv = Poly::x() - Poly::constant(v);
    auto div = divide_right(q, xv, policy);
    if (compare(div.remainder.coeff(0), qv).verdict == Cmp::different)
        throw InternalError("substitution and division disagree on q(v)");

    SkewSeries<K> inv = qv.inverse(policy);
    BezoutWitness<K> wit;
    wit.q_at_v = qv;
    wit.p1 = Poly::constant(inv);
    wit.p2 = -(inv * div.quotient);
    wit.expansion = poly_compare(wit.p1 * q + wit.p2 * xv, Poly::one());
    if (wit.expansion.verdict == Cmp::different)
        throw InternalError("Bezout expansion failed to reproduce 1");
    return wit;
}

template <SigmaField K>
struct ProductFormulaReport {
    SkewSeries<K> lhs;   // (f*g)(a)
    SkewSeries<K> rhs;   // f(a^{g(a)})*g(a), expanded to sum_i f_i * g(a) * a^i
    bool g_vanishes = false;
    CompareReport<K> verdict;
    // Literal route through the conjugation b*a*b^{-1}; agreement is to
    // precision since the inverse truncates.
    std::optional<CompareReport<K>> conjugate_route;
};

// The substitution law (fg)(a) = f(a^{g(a)})*g(a) for g(a) != 0, and
// (fg)(a) = 0 for g(a) = 0.  With b = g(a), the right side telescopes:
// f(b a b^{-1})*b = sum_i f_i (b a b^{-1})^i b = sum_i f_i * b * a^i,
// which needs no inversion and stays exact on exact inputs.
template <SigmaField K>
ProductFormulaReport<K> product_formula_check(const CentralPoly<SkewSeries<K>>& f,
                                              const CentralPoly<SkewSeries<K>>& g,
                                              const SkewSeries<K>& a,
                                              const PrecisionPolicy& policy = {}) {
    using S = SkewSeries<K>;
    ProductFormulaReport<K> rep;
    rep.lhs = (f * g).evaluate(a);
    S b = g.evaluate(a);
    if (b.is_zero()) {
        rep.g_vanishes = true;
        rep.rhs = S::zero();
        rep.verdict = compare(rep.lhs, rep.rhs);
        return rep;
    }
    if (b.is_precision_zero()) {
        rep.rhs = b;
        rep.verdict.verdict = Cmp::inconclusive;
        rep.verdict.trusted_to = b.precision();
        return rep;
    }
    S rhs = S::zero();
    S apow = S::one();
    for (int i = 0; i <= f.degree(); ++i) {
        rhs = rhs + f.coeff(size_t(i)) * b * apow;
        apow = apow * a;
    }
    rep.rhs = rhs;
    rep.verdict = compare(rep.lhs, rep.rhs);
    try {
        S rhs2 = f.evaluate(conjugate(a, b, policy)) * b;
        rep.conjugate_route = compare(rep.lhs, rhs2);
    } catch (const PrecisionExhaustedError&) {
        rep.conjugate_route = std::nullopt;
    }
    return rep;
}

}  // namespace skewcert
