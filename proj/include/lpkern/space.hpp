#pragma once

#include "lpkern/rational.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lpkern {

using Label = std::uint64_t;
using VectorId = std::uint32_t;

enum class SpaceKind { Lp, C0 };

/// Exact exponent p = num/den >= 1.
struct Exponent {
    std::int64_t num = 2;
    std::int64_t den = 1;

    Exponent() = default;
    Exponent(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (d <= 0 || n <= 0) throw std::invalid_argument("exponent must be positive");
        const std::int64_t g = std::gcd(n, d);
        num /= g;
        den /= g;
        if (num < den) throw std::invalid_argument("exponent must be >= 1");
    }

    bool is_integer() const { return den == 1; }
    bool is_one() const { return num == den; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    Rational rational() const { return Rational(num, den); }

    /// Conjugate exponent p* with 1/p + 1/p* = 1; requires p > 1.
    Exponent conjugate() const {
        if (is_one()) throw std::domain_error("conjugate exponent undefined for p = 1");
        return Exponent(num, num - den);
    }

    friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Finite model of lp(Gamma) or c0(Gamma): coordinate labels are 0..universe_size-1.
struct SpaceDescriptor {
    SpaceKind kind = SpaceKind::Lp;
    Exponent p{2, 1};  // meaningful iff kind == Lp
    std::uint64_t universe_size = 0;

    static SpaceDescriptor lp(Exponent p, std::uint64_t n) { return {SpaceKind::Lp, p, n}; }
    static SpaceDescriptor c0(std::uint64_t n) { return {SpaceKind::C0, Exponent{1, 1}, n}; }

    bool contains(Label g) const { return g < universe_size; }

    /// Dual model: lp(p) <-> lp(p*) for p > 1, l1 <-> c0 (sup norm stands in for l_inf).
    SpaceDescriptor dual() const {
        if (kind == SpaceKind::C0) return lp(Exponent{1, 1}, universe_size);
        if (p.is_one()) return c0(universe_size);
        return lp(p.conjugate(), universe_size);
    }

    friend bool operator==(const SpaceDescriptor& a, const SpaceDescriptor& b) {
        if (a.universe_size != b.universe_size || a.kind != b.kind) return false;
        return a.kind == SpaceKind::C0 || a.p == b.p;
    }
};

}  // namespace lpkern
