#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "skewcert/errors.hpp"
#include "skewcert/fields.hpp"

namespace skewcert {

struct PrecisionPolicy {
    // Absolute t-adic cutoff for operations that must truncate.
    int working_precision = 16;

    void validate() const {
        if (working_precision < 4)
            throw InvalidArgumentError("working_precision must be at least 4");
    }
};

enum class Cmp { equal, different, inconclusive };

template <SigmaField K>
struct CompareReport {
    Cmp verdict = Cmp::equal;
    std::optional<int> exponent;    // first conclusive mismatch
    K lhs = K::zero();              // coefficients at that exponent
    K rhs = K::zero();
    std::optional<int> trusted_to;  // joint precision when not exact
};

template <SigmaField K>
using CommutationReport = CompareReport<K>;

// Skew Laurent series over K((t, sigma)) with the twist t*u = sigma(u)*t,
// so coefficients pass each other as (f*g)_k = sum_{i+j=k} f_i * sigma^i(g_j).
//
// An element is a finite trusted window of coefficients plus a precision tag:
// exact, or KnownModulo(p) meaning coefficients are trusted only below t^p.
// Canonical form: the stored window has nonzero first and last entries and
// lies strictly below the precision.  An inexact element whose window is
// empty is the flagged state O(t^p): known to vanish below p, unknown after.
template <SigmaField K>
class SkewSeries {
public:
    SkewSeries() = default;  // exact zero

    SkewSeries(int val, std::vector<K> coeffs, std::optional<int> precision = std::nullopt)
        : val_(val), coeffs_(std::move(coeffs)), prec_(precision) {
        normalize();
    }

    static SkewSeries zero() { return {}; }
    static SkewSeries one() { return term(K::one(), 0); }
    static SkewSeries constant(const K& c) { return term(c, 0); }
    static SkewSeries t(int exp = 1) { return term(K::one(), exp); }
    static SkewSeries term(const K& c, int exp) { return SkewSeries(exp, {c}); }
    static SkewSeries order_unknown(int p) { return SkewSeries(0, {}, p); }

    bool is_zero() const { return coeffs_.empty() && !prec_; }
    bool is_precision_zero() const { return coeffs_.empty() && prec_.has_value(); }
    bool definitely_nonzero() const { return !coeffs_.empty(); }
    bool is_exact() const { return !prec_.has_value(); }
    bool is_one() const { return is_exact() && coeffs_.size() == 1 && val_ == 0 && coeffs_[0].is_one(); }
    bool is_single_term() const { return is_exact() && coeffs_.size() == 1; }
    bool is_constant() const { return is_zero() || (is_exact() && coeffs_.size() == 1 && val_ == 0); }

    // 0 is the canonical sentinel for elements without a stored term.
    int valuation() const { return val_; }
    std::optional<int> precision() const { return prec_; }
    const std::vector<K>& window() const { return coeffs_; }

    K coeff_at(int exp) const {
        if (exp < val_ || exp >= val_ + int(coeffs_.size())) return K::zero();
        return coeffs_[size_t(exp - val_)];
    }

    // Whether the coefficient of t^exp is pinned down by this element.
    bool trusted_at(int exp) const { return !prec_ || exp < *prec_; }

    K leading_coeff() const {
        if (coeffs_.empty()) throw InvalidArgumentError("leading coefficient of a zero window");
        return coeffs_.front();
    }

    friend SkewSeries operator+(const SkewSeries& f, const SkewSeries& g) {
        std::optional<int> prec = min_prec(f.prec_, g.prec_);
        if (f.coeffs_.empty() && g.coeffs_.empty()) return SkewSeries(0, {}, prec);
        int lo = f.coeffs_.empty() ? g.val_ : (g.coeffs_.empty() ? f.val_ : std::min(f.val_, g.val_));
        int hi = std::max(f.hi_exp(), g.hi_exp());
        std::vector<K> out;
        out.reserve(size_t(hi - lo + 1));
        for (int e = lo; e <= hi; ++e) out.push_back(f.coeff_at(e) + g.coeff_at(e));
        return SkewSeries(lo, std::move(out), prec);
    }

    friend SkewSeries operator-(const SkewSeries& f, const SkewSeries& g) { return f + (-g); }

    SkewSeries operator-() const {
        SkewSeries out = *this;
        for (K& c : out.coeffs_) c = -c;
        return out;
    }

    friend SkewSeries operator*(const SkewSeries& f, const SkewSeries& g) {
        if (f.is_zero() || g.is_zero()) return SkewSeries();
        if (f.is_precision_zero() || g.is_precision_zero())
            throw PrecisionExhaustedError("product with a fully truncated operand has no trusted coefficient");
        std::optional<int> prec = min_prec(
            f.prec_ ? std::optional<int>(*f.prec_ + g.val_) : std::nullopt,
            g.prec_ ? std::optional<int>(*g.prec_ + f.val_) : std::nullopt);
        int lo = f.val_ + g.val_;
        if (prec && *prec <= lo)
            throw PrecisionExhaustedError("product precision does not exceed its valuation");
        int hi = f.hi_exp() + g.hi_exp();
        if (prec) hi = std::min(hi, *prec - 1);
        std::vector<K> out;
        out.reserve(size_t(hi - lo + 1));
        for (int k = lo; k <= hi; ++k) {
            K acc = K::zero();
            int i0 = std::max(f.val_, k - g.hi_exp());
            int i1 = std::min(f.hi_exp(), k - g.val_);
            for (int i = i0; i <= i1; ++i)
                acc = acc + f.coeff_at(i) * sigma_pow(g.coeff_at(k - i), i);
            out.push_back(acc);
        }
        return SkewSeries(lo, std::move(out), prec);
    }

    // Exact for a single stored term (the inverse of c*t^m is sigma^{-m}(c^{-1})*t^{-m});
    // otherwise coefficients are produced up to the working cutoff, further capped by
    // p - 2*val(f) when the input itself is trusted only below t^p.
    SkewSeries inverse(const PrecisionPolicy& policy = {}) const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero");
        if (is_precision_zero())
            throw PrecisionExhaustedError("inverse of a series indistinguishable from zero");
        const int m = val_;
        const K lead_inv = coeffs_.front().inverse();
        if (is_single_term()) return term(sigma_pow(lead_inv, -m), -m);
        policy.validate();
        int limit = policy.working_precision;
        if (prec_) limit = std::min(limit, *prec_ - 2 * m);
        if (limit <= -m)
            throw PrecisionExhaustedError("inverse valuation reaches the working cutoff");
        std::vector<K> out;
        out.reserve(size_t(limit + m));
        for (int e = -m; e < limit; ++e) {
            // Coefficient of t^{e+m} in f*g must be 1 at e = -m and 0 after.
            const int k = e + m;
            K acc = K::zero();
            for (int i = m + 1; i <= hi_exp() && k - i >= -m; ++i)
                acc = acc + coeff_at(i) * sigma_pow(out[size_t(k - i + m)], i);
            K target = (e == -m) ? K::one() : K::zero();
            out.push_back(sigma_pow(lead_inv * (target - acc), -m));
        }
        return SkewSeries(-m, std::move(out), limit);
    }

    SkewSeries truncated(int p) const {
        if (is_zero()) return *this;
        SkewSeries out = *this;
        out.prec_ = prec_ ? std::min(*prec_, p) : p;
        out.normalize();
        return out;
    }

    // Representation equality; coincides with semantic equality on exact
    // canonical elements.  Use compare() for three-valued equality.
    friend bool operator==(const SkewSeries& a, const SkewSeries& b) = default;

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t n = 0; n < coeffs_.size(); ++n) {
            if (coeffs_[n].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += format_term(coeffs_[n], val_ + int(n));
        }
        if (prec_) {
            if (!out.empty()) out += " + ";
            out += "O(t^" + std::to_string(*prec_) + ")";
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const SkewSeries& f) { return os << f.str(); }

private:
    int hi_exp() const { return val_ + int(coeffs_.size()) - 1; }  // val_ - 1 when empty

    static std::optional<int> min_prec(std::optional<int> a, std::optional<int> b) {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }

    static std::string format_term(const K& c, int exp) {
        std::string cs = c.str();
        bool composite = cs.find_first_of("+-/*", 1) != std::string::npos;
        if (composite) cs = "(" + cs + ")";
        if (exp == 0) return cs;
        std::string ts = exp == 1 ? "t" : "t^" + std::to_string(exp);
        if (c.is_one()) return ts;
        return cs + "*" + ts;
    }

    void normalize() {
        if (prec_) {
            int trusted = *prec_ - val_;
            if (trusted < int(coeffs_.size())) coeffs_.resize(size_t(std::max(trusted, 0)));
        }
        size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
        if (lead) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + long(lead));
            val_ += int(lead);
        }
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
        if (coeffs_.empty()) val_ = 0;
    }

    int val_ = 0;
    std::vector<K> coeffs_;
    std::optional<int> prec_;
};

// Three-valued equality.  "different" is conclusive: some exponent trusted on
// both sides carries distinct coefficients.  "equal" needs both sides exact.
template <SigmaField K>
CompareReport<K> compare(const SkewSeries<K>& a, const SkewSeries<K>& b) {
    CompareReport<K> rep;
    std::optional<int> prec;
    if (a.precision() && (!b.precision() || *a.precision() < *b.precision())) prec = a.precision();
    else prec = b.precision();
    rep.trusted_to = prec;
    int lo = std::min(a.valuation(), b.valuation());
    int hi = std::max(a.valuation() + int(a.window().size()), b.valuation() + int(b.window().size()));
    for (int e = lo; e < hi; ++e) {
        if (prec && e >= *prec) break;
        K x = a.coeff_at(e);
        K y = b.coeff_at(e);
        if (!(x == y)) {
            rep.verdict = Cmp::different;
            rep.exponent = e;
            rep.lhs = x;
            rep.rhs = y;
            return rep;
        }
    }
    rep.verdict = prec ? Cmp::inconclusive : Cmp::equal;
    if (!prec) rep.trusted_to = std::nullopt;
    return rep;
}

template <SigmaField K>
SkewSeries<K> conjugate(const SkewSeries<K>& a, const SkewSeries<K>& b,
                        const PrecisionPolicy& policy = {}) {
    if (a.is_zero()) return a;
    return b * a * b.inverse(policy);
}

// Compares f*g against g*f.  Identical representations commute outright;
// otherwise a conclusive coefficient mismatch proves non-commutation, and
// agreement on inexact operands stays inconclusive.
template <SigmaField K>
CommutationReport<K> commutes(const SkewSeries<K>& f, const SkewSeries<K>& g) {
    if (f == g) return CommutationReport<K>{};
    return compare(f * g, g * f);
}

}  // namespace skewcert
