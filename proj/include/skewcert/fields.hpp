#pragma once

#include <concepts>
#include <cstdint>
#include <vector>

#include "skewcert/gaussian.hpp"
#include "skewcert/gf4.hpp"

namespace skewcert {

// Coefficient fields carry a distinguished automorphism sigma of finite
// order.  The twist rule t*u = sigma(u)*t makes sigma part of the algebra,
// not a detail of any one operation.
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Gf4> {
    static constexpr const char* name = "gf4";
    static constexpr bool finite = true;
    static constexpr int sigma_order = 2;
    static Gf4 sigma(Gf4 x) { return x.frobenius(); }
    static std::vector<Gf4> all_elements() {
        auto a = Gf4::all();
        return {a.begin(), a.end()};
    }
};

template <>
struct FieldTraits<GaussianRational> {
    static constexpr const char* name = "gaussian";
    static constexpr bool finite = false;
    static constexpr int sigma_order = 2;
    static GaussianRational sigma(const GaussianRational& x) { return x.conj(); }
};

template <class K>
concept SigmaField = requires(const K& x, const K& y) {
    { K() } -> std::same_as<K>;
    { K::zero() } -> std::same_as<K>;
    { K::one() } -> std::same_as<K>;
    { x + y } -> std::same_as<K>;
    { x - y } -> std::same_as<K>;
    { x * y } -> std::same_as<K>;
    { -x } -> std::same_as<K>;
    { x.inverse() } -> std::same_as<K>;
    { x.is_zero() } -> std::same_as<bool>;
    { x == y } -> std::same_as<bool>;
    { FieldTraits<K>::sigma(x) } -> std::same_as<K>;
    { FieldTraits<K>::sigma_order } -> std::convertible_to<int>;
};

template <SigmaField K>
K sigma(const K& x) {
    return FieldTraits<K>::sigma(x);
}

// sigma^i for any integer i; exponents reduce modulo the order.
template <SigmaField K>
K sigma_pow(const K& x, std::int64_t i) {
    constexpr int order = FieldTraits<K>::sigma_order;
    int r = int(((i % order) + order) % order);
    K y = x;
    for (int k = 0; k < r; ++k) y = FieldTraits<K>::sigma(y);
    return y;
}

static_assert(SigmaField<Gf4>);
static_assert(SigmaField<GaussianRational>);

}  // namespace skewcert
