#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace lpkern {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// num/den as a rational, accepting negative denominators (the cpp_rational
/// two-argument constructor rejects them).
inline Rational make_rational(Int num, Int den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline Rational pow_int(const Rational& base, unsigned e) {
    Rational acc(1), b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

/// Floor of the p-th root of a non-negative integer (Newton iteration).
inline Int iroot_floor(const Int& a, unsigned p) {
    if (a < 0) throw std::invalid_argument("iroot_floor: negative input");
    if (p == 0) throw std::invalid_argument("iroot_floor: zero exponent");
    if (a == 0 || a == 1 || p == 1) return a;
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(a)) + 1;
    Int x = Int(1) << (bits / p + 1);
    for (;;) {
        // x_{k+1} = ((p-1)x + a / x^{p-1}) / p
        Int xp1 = 1;
        for (unsigned i = 0; i + 1 < p; ++i) xp1 *= x;
        Int next = ((p - 1) * x + a / xp1) / p;
        if (next >= x) break;
        x = next;
    }
    // x is now the floor root or one above; fix up.
    Int xp = 1;
    for (unsigned i = 0; i < p; ++i) xp *= x;
    while (xp > a) {
        --x;
        xp = 1;
        for (unsigned i = 0; i < p; ++i) xp *= x;
    }
    return x;
}

/// Exact p-th root of a non-negative rational, if one exists in the rationals.
inline std::optional<Rational> exact_root(const Rational& r, unsigned p) {
    if (r < 0) return std::nullopt;
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    Int rn = iroot_floor(num, p), rd = iroot_floor(den, p);
    Int rnp = 1, rdp = 1;
    for (unsigned i = 0; i < p; ++i) { rnp *= rn; rdp *= rd; }
    if (rnp == num && rdp == den) return Rational(rn, rd);
    return std::nullopt;
}

/// Canonical rational upper bound for r^(1/p): the exact root when it exists,
/// otherwise the dyadic (s+1)/2^k with ~rel_bits bits of relative precision.
inline Rational root_upper(const Rational& r, unsigned p, unsigned rel_bits = 64) {
    if (r < 0) throw std::invalid_argument("root_upper: negative input");
    if (r == 0) return Rational(0);
    if (auto ex = exact_root(r, p)) return *ex;
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    const long nb = static_cast<long>(boost::multiprecision::msb(num));
    const long db = static_cast<long>(boost::multiprecision::msb(den));
    long k = static_cast<long>(rel_bits);
    if (db > nb) k += (db - nb) / static_cast<long>(p) + 2;
    const Int scaled = (num << static_cast<unsigned>(p * k)) / den; // floor
    const Int s = iroot_floor(scaled, p);
    return Rational(s + 1, Int(1) << static_cast<unsigned>(k));
}

}  // namespace lpkern
