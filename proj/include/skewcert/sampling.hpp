#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "skewcert/bipoly.hpp"
#include "skewcert/central_poly.hpp"
#include "skewcert/fields.hpp"
#include "skewcert/quaternion.hpp"
#include "skewcert/series.hpp"

namespace skewcert {

// splitmix64 of (seed, index): every trial gets an independent stream, and a
// run is reproducible from the seed alone.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(mix_seed(seed, index));
}

template <SigmaField K>
K random_element(std::mt19937_64& rng);

template <>
inline Gf4 random_element<Gf4>(std::mt19937_64& rng) {
    return Gf4(std::uint8_t(rng() & 3u));
}

template <>
inline GaussianRational random_element<GaussianRational>(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    Rational re(num(rng), den(rng));
    Rational im(num(rng), den(rng));
    return {re, im};
}

template <SigmaField K>
K random_nonzero(std::mt19937_64& rng) {
    for (;;) {
        K x = random_element<K>(rng);
        if (!x.is_zero()) return x;
    }
}

struct SeriesShape {
    int min_val = -2;
    int max_val = 3;
    int max_len = 4;
};

template <SigmaField K>
SkewSeries<K> random_series(std::mt19937_64& rng, SeriesShape shape = {}) {
    std::uniform_int_distribution<int> val(shape.min_val, shape.max_val);
    std::uniform_int_distribution<int> len(1, shape.max_len);
    int n = len(rng);
    std::vector<K> coeffs;
    coeffs.reserve(size_t(n));
    for (int k = 0; k < n; ++k) coeffs.push_back(random_element<K>(rng));
    return SkewSeries<K>(val(rng), std::move(coeffs));
}

template <SigmaField K>
SkewSeries<K> random_nonzero_series(std::mt19937_64& rng, SeriesShape shape = {}) {
    for (;;) {
        SkewSeries<K> f = random_series<K>(rng, shape);
        if (f.definitely_nonzero()) return f;
    }
}

template <SigmaField K>
SkewSeries<K> random_single_term(std::mt19937_64& rng, SeriesShape shape = {}) {
    std::uniform_int_distribution<int> val(shape.min_val, shape.max_val);
    return SkewSeries<K>::term(random_nonzero<K>(rng), val(rng));
}

template <SigmaField K>
CentralPoly<SkewSeries<K>> random_poly(std::mt19937_64& rng, int max_deg = 3,
                                       SeriesShape shape = {}) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    int d = deg(rng);
    std::vector<SkewSeries<K>> coeffs;
    coeffs.reserve(size_t(d + 1));
    for (int i = 0; i <= d; ++i) coeffs.push_back(random_series<K>(rng, shape));
    return CentralPoly<SkewSeries<K>>(std::move(coeffs));
}

// Divisor whose leading coefficient is a single term, so right division by
// it needs no truncation.
template <SigmaField K>
CentralPoly<SkewSeries<K>> random_sharp_divisor(std::mt19937_64& rng, int max_deg = 2,
                                                SeriesShape shape = {}) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    int d = deg(rng);
    std::vector<SkewSeries<K>> coeffs;
    coeffs.reserve(size_t(d + 1));
    for (int i = 0; i < d; ++i) coeffs.push_back(random_series<K>(rng, shape));
    coeffs.push_back(random_single_term<K>(rng, shape));
    return CentralPoly<SkewSeries<K>>(std::move(coeffs));
}

template <SigmaField K>
BiPoly<SkewSeries<K>> random_bipoly(std::mt19937_64& rng, int max_ydeg = 2, int max_xdeg = 2,
                                    SeriesShape shape = {}) {
    std::uniform_int_distribution<int> deg(0, max_ydeg);
    int d = deg(rng);
    std::vector<CentralPoly<SkewSeries<K>>> rows;
    rows.reserve(size_t(d + 1));
    for (int j = 0; j <= d; ++j) rows.push_back(random_poly<K>(rng, max_xdeg, shape));
    return BiPoly<SkewSeries<K>>(std::move(rows));
}

inline RationalQuaternion random_quaternion(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    auto part = [&] { return Rational(num(rng), den(rng)); };
    Rational r = part(), x = part(), y = part(), z = part();
    return {r, x, y, z};
}

inline RationalQuaternion random_nonzero_quaternion(std::mt19937_64& rng) {
    for (;;) {
        RationalQuaternion q = random_quaternion(rng);
        if (!q.is_zero()) return q;
    }
}

}  // namespace skewcert
