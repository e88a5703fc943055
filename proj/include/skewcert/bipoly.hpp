#pragma once

#include <string>
#include <vector>

#include "skewcert/central_poly.hpp"

namespace skewcert {

// Polynomials in two central variables x, y over a division ring D, stored
// as rows by y-degree with CentralPoly coefficients in x.
template <RingElement D>
class BiPoly {
public:
    using Row = CentralPoly<D>;

    BiPoly() = default;
    explicit BiPoly(std::vector<Row> rows) : rows_(std::move(rows)) { trim(); }

    static BiPoly zero() { return {}; }
    static BiPoly one() { return from_x_poly(Row::one()); }
    static BiPoly constant(const D& c) { return from_x_poly(Row::constant(c)); }
    static BiPoly from_x_poly(const Row& p) { return BiPoly(std::vector<Row>{p}); }
    static BiPoly x() { return from_x_poly(Row::x()); }
    static BiPoly y() { return BiPoly(std::vector<Row>{Row::zero(), Row::one()}); }

    bool is_zero() const { return rows_.empty(); }
    int y_degree() const { return int(rows_.size()) - 1; }
    int x_degree() const {
        int d = -1;
        for (const Row& r : rows_) d = std::max(d, r.degree());
        return d;
    }
    const std::vector<Row>& rows() const { return rows_; }
    Row row(size_t j) const { return j < rows_.size() ? rows_[j] : Row::zero(); }
    D coeff(size_t i, size_t j) const { return row(j).coeff(i); }  // of x^i y^j

    friend BiPoly operator+(const BiPoly& f, const BiPoly& g) {
        std::vector<Row> out(std::max(f.rows_.size(), g.rows_.size()));
        for (size_t j = 0; j < out.size(); ++j) out[j] = f.row(j) + g.row(j);
        return BiPoly(std::move(out));
    }

    friend BiPoly operator-(const BiPoly& f, const BiPoly& g) { return f + (-g); }

    BiPoly operator-() const {
        BiPoly out = *this;
        for (Row& r : out.rows_) r = -r;
        return out;
    }

    friend BiPoly operator*(const BiPoly& f, const BiPoly& g) {
        if (f.is_zero() || g.is_zero()) return {};
        std::vector<Row> out(f.rows_.size() + g.rows_.size() - 1, Row::zero());
        for (size_t i = 0; i < f.rows_.size(); ++i)
            for (size_t j = 0; j < g.rows_.size(); ++j)
                out[i + j] = out[i + j] + f.rows_[i] * g.rows_[j];
        return BiPoly(std::move(out));
    }

    friend BiPoly operator*(const D& s, const BiPoly& f) {
        BiPoly out = f;
        for (Row& r : out.rows_) r = s * r;
        out.trim();
        return out;
    }

    friend BiPoly operator*(const BiPoly& f, const D& s) {
        BiPoly out = f;
        for (Row& r : out.rows_) r = r * s;
        out.trim();
        return out;
    }

    friend bool operator==(const BiPoly& f, const BiPoly& g) = default;

    std::string str() const {
        if (rows_.empty()) return "0";
        std::string out;
        for (size_t j = rows_.size(); j-- > 0;) {
            if (rows_[j].is_zero()) continue;
            if (!out.empty()) out += " + ";
            std::string rs = rows_[j].str();
            if (j == 0) { out += rs; continue; }
            std::string ys = j == 1 ? "y" : "y^" + std::to_string(j);
            if (rows_[j].degree() == 0 && rows_[j].coeff(0).is_one()) out += ys;
            else out += "(" + rs + ")*" + ys;
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
    }

    std::vector<Row> rows_;
};

template <SigmaField K>
struct BiPolyCompare {
    Cmp verdict = Cmp::equal;
    int x_slot = -1, y_slot = -1;
    CompareReport<K> detail;
    std::optional<int> trusted_to;
};

template <SigmaField K>
BiPolyCompare<K> bipoly_compare(const BiPoly<SkewSeries<K>>& f, const BiPoly<SkewSeries<K>>& g) {
    BiPolyCompare<K> out;
    int top = std::max(f.y_degree(), g.y_degree());
    for (int j = 0; j <= top; ++j) {
        auto rep = poly_compare(f.row(size_t(j)), g.row(size_t(j)));
        if (rep.verdict == Cmp::different) {
            out.verdict = Cmp::different;
            out.x_slot = rep.slot;
            out.y_slot = j;
            out.detail = rep.detail;
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
struct YDivisionResult {
    BiPoly<SkewSeries<K>> quotient;
    CentralPoly<SkewSeries<K>> remainder;  // free of y
};

// Division by y - c for a constant c: f = quotient*(y - c) + remainder with
// the remainder in D[x].  Since y is central and the divisor is monic in y,
// this is plain Horner in y and always exact: the remainder is
// sum_j h_j(x)*c^j with the powers of c collected on the right.
template <SigmaField K>
YDivisionResult<K> divide_y(const BiPoly<SkewSeries<K>>& f, const SkewSeries<K>& c) {
    using Row = CentralPoly<SkewSeries<K>>;
    const int Y = f.y_degree();
    if (Y < 0) return {BiPoly<SkewSeries<K>>::zero(), Row::zero()};
    if (Y == 0) return {BiPoly<SkewSeries<K>>::zero(), f.row(0)};
    std::vector<Row> quot(size_t(Y), Row::zero());
    Row acc = f.row(size_t(Y));
    for (int j = Y; j >= 1; --j) {
        quot[size_t(j - 1)] = acc;
        acc = acc * c + f.row(size_t(j - 1));
    }
    return {BiPoly<SkewSeries<K>>(std::move(quot)), acc};
}

}  // namespace skewcert
