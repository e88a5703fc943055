#pragma once

#include <array>
#include <ostream>
#include <string>

#include "skewcert/errors.hpp"
#include "skewcert/rational.hpp"

namespace skewcert {

// Rational quaternions r + x*i + y*j + z*k with i^2 = j^2 = k^2 = ijk = -1.
// A division ring: every nonzero element is a unit.
class RationalQuaternion {
public:
    RationalQuaternion() = default;
    RationalQuaternion(Rational r, Rational x, Rational y, Rational z)
        : c_{std::move(r), std::move(x), std::move(y), std::move(z)} {}
    explicit RationalQuaternion(int n) : c_{Rational(n), 0, 0, 0} {}

    static RationalQuaternion zero() { return {}; }
    static RationalQuaternion one() { return RationalQuaternion(1); }
    static RationalQuaternion i() { return {0, 1, 0, 0}; }
    static RationalQuaternion j() { return {0, 0, 1, 0}; }
    static RationalQuaternion k() { return {0, 0, 0, 1}; }

    const Rational& r() const { return c_[0]; }
    const Rational& x() const { return c_[1]; }
    const Rational& y() const { return c_[2]; }
    const Rational& z() const { return c_[3]; }
    const std::array<Rational, 4>& parts() const { return c_; }

    bool is_zero() const { return c_[0] == 0 && is_central_zero_part(); }
    bool is_one() const { return c_[0] == 1 && is_central_zero_part(); }
    bool is_central() const { return is_central_zero_part(); }

    friend RationalQuaternion operator+(const RationalQuaternion& a, const RationalQuaternion& b) {
        return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]};
    }
    friend RationalQuaternion operator-(const RationalQuaternion& a, const RationalQuaternion& b) {
        return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]};
    }
    RationalQuaternion operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

    friend RationalQuaternion operator*(const RationalQuaternion& a, const RationalQuaternion& b) {
        const auto& p = a.c_;
        const auto& q = b.c_;
        return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
                p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
                p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
                p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
    }

    RationalQuaternion conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }

    Rational norm() const {
        return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
    }

    RationalQuaternion inverse() const {
        if (is_zero()) throw DivisionByZeroError();
        Rational n = norm();
        return {c_[0] / n, -c_[1] / n, -c_[2] / n, -c_[3] / n};
    }

    friend RationalQuaternion operator*(const Rational& s, const RationalQuaternion& a) {
        return {s * a.c_[0], s * a.c_[1], s * a.c_[2], s * a.c_[3]};
    }

    friend bool operator==(const RationalQuaternion& a, const RationalQuaternion& b) = default;

    std::string str() const {
        static const char* units[4] = {"", "i", "j", "k"};
        std::string out;
        for (int n = 0; n < 4; ++n) {
            if (c_[n] == 0) continue;
            if (!out.empty() && c_[n] > 0) out += "+";
            out += format_rational(c_[n]);
            out += units[n];
        }
        return out.empty() ? "0" : out;
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalQuaternion& a) {
        return os << a.str();
    }

private:
    bool is_central_zero_part() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    std::array<Rational, 4> c_{Rational(0), Rational(0), Rational(0), Rational(0)};
};

inline RationalQuaternion commutator(const RationalQuaternion& a, const RationalQuaternion& b) {
    return a * b - b * a;
}

}  // namespace skewcert
