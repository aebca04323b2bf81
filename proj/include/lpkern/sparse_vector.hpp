#pragma once

#include "lpkern/space.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace lpkern {

/// Finitely supported vector: sorted (label, value) pairs, no explicit zeros.
template <class S>
struct SparseVector {
    std::vector<std::pair<Label, S>> entries;

    SparseVector() = default;

    /// Canonicalize arbitrary input: sort by label, merge duplicates, drop zeros.
    static SparseVector from_entries(std::vector<std::pair<Label, S>> raw) {
        std::sort(raw.begin(), raw.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseVector v;
        v.entries.reserve(raw.size());
        for (auto& [lab, val] : raw) {
            if (!v.entries.empty() && v.entries.back().first == lab)
                v.entries.back().second += val;
            else
                v.entries.emplace_back(lab, std::move(val));
            if (!v.entries.empty() && v.entries.back().second == 0) v.entries.pop_back();
        }
        return v;
    }

    bool is_zero() const { return entries.empty(); }
    std::size_t support_size() const { return entries.size(); }

    const S* at(Label g) const {
        auto it = std::lower_bound(entries.begin(), entries.end(), g,
                                   [](const auto& e, Label lab) { return e.first < lab; });
        if (it != entries.end() && it->first == g) return &it->second;
        return nullptr;
    }

    Label max_label() const { return entries.empty() ? 0 : entries.back().first; }

    std::vector<Label> support() const {
        std::vector<Label> s;
        s.reserve(entries.size());
        for (const auto& e : entries) s.push_back(e.first);
        return s;
    }

    SparseVector scaled(const S& c) const {
        SparseVector v;
        if (c == 0) return v;
        v.entries.reserve(entries.size());
        for (const auto& [lab, val] : entries) v.entries.emplace_back(lab, val * c);
        return v;
    }

    /// this + c * other, canonical.
    SparseVector axpy(const S& c, const SparseVector& other) const {
        SparseVector v;
        v.entries.reserve(entries.size() + other.entries.size());
        auto a = entries.begin(), b = other.entries.begin();
        while (a != entries.end() || b != other.entries.end()) {
            if (b == other.entries.end() || (a != entries.end() && a->first < b->first)) {
                v.entries.push_back(*a++);
            } else if (a == entries.end() || b->first < a->first) {
                S val = c * b->second;
                if (val != 0) v.entries.emplace_back(b->first, std::move(val));
                ++b;
            } else {
                S val = a->second + c * b->second;
                if (val != 0) v.entries.emplace_back(a->first, std::move(val));
                ++a;
                ++b;
            }
        }
        return v;
    }

    friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

template <class S>
bool supports_intersect(const SparseVector<S>& x, const SparseVector<S>& y) {
    auto a = x.entries.begin();
    auto b = y.entries.begin();
    while (a != x.entries.end() && b != y.entries.end()) {
        if (a->first < b->first)
            ++a;
        else if (b->first < a->first)
            ++b;
        else
            return true;
    }
    return false;
}

/// Duality bracket <x, f> over the intersection of supports.
template <class S>
S pairing(const SparseVector<S>& x, const SparseVector<S>& f) {
    S acc{};
    auto a = x.entries.begin();
    auto b = f.entries.begin();
    while (a != x.entries.end() && b != f.entries.end()) {
        if (a->first < b->first)
            ++a;
        else if (b->first < a->first)
            ++b;
        else {
            acc += a->second * b->second;
            ++a;
            ++b;
        }
    }
    return acc;
}

template <class S>
SparseVector<S> unit_vector(Label g, const SpaceDescriptor& space) {
    if (!space.contains(g)) throw std::out_of_range("unit_vector: label outside universe");
    SparseVector<S> v;
    v.entries.emplace_back(g, S(1));
    return v;
}

inline Rational scalar_abs(const Rational& v) { return rat_abs(v); }
inline double scalar_abs(double v) { return std::abs(v); }

/// Sum of |x(g)|^p for integer p >= 1; exact in rational mode.
template <class S>
S norm_pow_int(const SparseVector<S>& x, unsigned p) {
    S acc{};
    for (const auto& [lab, val] : x.entries) {
        S a = scalar_abs(val);
        S t = a;
        for (unsigned i = 1; i < p; ++i) t *= a;
        acc += t;
    }
    return acc;
}

template <class S>
S max_abs(const SparseVector<S>& x) {
    S m{};
    for (const auto& [lab, val] : x.entries) {
        S a = scalar_abs(val);
        if (a > m) m = a;
    }
    return m;
}

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }
inline double to_double(double d) { return d; }

/// Norm as binary64, for display and float-mode checks.
template <class S>
double norm_value(const SparseVector<S>& x, const SpaceDescriptor& space) {
    if (x.is_zero()) return 0.0;
    if (space.kind == SpaceKind::C0) return to_double(max_abs(x));
    const double p = space.p.value();
    double acc = 0.0;
    for (const auto& [lab, val] : x.entries) acc += std::pow(std::abs(to_double(val)), p);
    return std::pow(acc, 1.0 / p);
}

/// Canonical rational upper bound nu >= ||x||, exact whenever the norm is rational
/// (always for p = 1 and c0; for other integer p when norm^p is a perfect power).
/// Non-integer p falls through to a 50-digit evaluation with a safety margin.
inline Rational norm_upper(const SparseVector<Rational>& x, const SpaceDescriptor& space) {
    if (x.is_zero()) return Rational(0);
    if (space.kind == SpaceKind::C0) return max_abs(x);
    if (space.p.is_one()) return norm_pow_int(x, 1);
    if (space.p.is_integer()) {
        const unsigned p = static_cast<unsigned>(space.p.num);
        return root_upper(norm_pow_int(x, p), p);
    }
    const BigFloat p(space.p.value());
    BigFloat acc = 0;
    for (const auto& [lab, val] : x.entries)
        acc += boost::multiprecision::pow(BigFloat(rat_abs(val)), p);
    const BigFloat nrm = boost::multiprecision::pow(acc, 1 / p);
    Rational r(nrm);
    r *= Rational(Int(1) + (Int(1) << 100), Int(1) << 100);  // relative margin 2^-100
    return r;
}

}  // namespace lpkern
