#pragma once

#include <ostream>
#include <string>

#include "skewcert/errors.hpp"
#include "skewcert/rational.hpp"

namespace skewcert {

// The Gaussian rationals Q(i).  Complex conjugation is the automorphism of
// order two fixing Q.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit GaussianRational(int n) : re_(n) {}

    static GaussianRational zero() { return {}; }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }

    GaussianRational conj() const { return {re_, -im_}; }

    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const {
        if (is_zero()) throw DivisionByZeroError();
        Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

    std::string str() const {
        if (im_ == 0) return format_rational(re_);
        std::string s = format_rational(im_) + "*i";
        if (re_ == 0) return s;
        return format_rational(re_) + (im_ > 0 ? "+" : "") + s;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& a) {
        return os << a.str();
    }

private:
    Rational re_{0};
    Rational im_{0};
};

}  // namespace skewcert
