#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <ostream>
#include <string>

#include "skewcert/errors.hpp"

namespace skewcert {

// The field with four elements, written {0, 1, w, w+1} with w^2 = w + 1.
// Encoding: bit 0 is the constant term, bit 1 the w term.
class Gf4 {
public:
    constexpr Gf4() = default;
    constexpr explicit Gf4(uint8_t bits) : bits_(bits & 3u) {}

    static constexpr Gf4 zero() { return Gf4(0); }
    static constexpr Gf4 one() { return Gf4(1); }
    static constexpr Gf4 gen() { return Gf4(2); }  // w

    constexpr uint8_t bits() const { return bits_; }
    constexpr bool is_zero() const { return bits_ == 0; }
    constexpr bool is_one() const { return bits_ == 1; }

    friend constexpr Gf4 operator+(Gf4 a, Gf4 b) { return Gf4(uint8_t(a.bits_ ^ b.bits_)); }
    friend constexpr Gf4 operator-(Gf4 a, Gf4 b) { return a + b; }
    constexpr Gf4 operator-() const { return *this; }

    friend constexpr Gf4 operator*(Gf4 a, Gf4 b) {
        // Carryless product, then reduce w^2 to w + 1.
        uint8_t p = 0;
        if (b.bits_ & 1u) p ^= a.bits_;
        if (b.bits_ & 2u) p ^= uint8_t(a.bits_ << 1);
        if (p & 4u) p = uint8_t((p & 3u) ^ 3u);
        return Gf4(p);
    }

    Gf4 inverse() const {
        if (bits_ == 0) throw DivisionByZeroError();
        // Nonzero elements are cube roots of unity, so x^-1 = x^2.
        return frobenius();
    }

    // The Frobenius map x -> x^2, the automorphism of order two fixing GF(2).
    constexpr Gf4 frobenius() const {
        static_assert(3u == (2u ^ 1u));
        return bits_ < 2 ? *this : Gf4(uint8_t(bits_ ^ 1u));
    }

    friend constexpr bool operator==(Gf4 a, Gf4 b) = default;

    static constexpr std::array<Gf4, 4> all() {
        return {Gf4(0), Gf4(1), Gf4(2), Gf4(3)};
    }

    std::string str() const {
        static const char* names[4] = {"0", "1", "w", "w+1"};
        return names[bits_];
    }

    static Gf4 parse(const std::string& text) {
        for (Gf4 e : all())
            if (e.str() == text) return e;
        throw ParseError("bad GF(4) element: " + text);
    }

    friend std::ostream& operator<<(std::ostream& os, Gf4 a) { return os << a.str(); }

private:
    uint8_t bits_ = 0;
};

}  // namespace skewcert
