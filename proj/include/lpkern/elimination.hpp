#pragma once

#include "lpkern/rational.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lpkern {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct RrefResult {
    RationalMatrix rows;               // nonzero rows only, reduced echelon form
    std::vector<std::size_t> pivots;   // pivot column per row, strictly increasing
    std::size_t rank() const { return rows.size(); }
};

namespace detail {

/// Fraction-free (Bareiss) forward elimination on integer rows.
/// Returns echelon rows and pivot columns; rows below rank are dropped.
inline void bareiss_echelon(std::vector<std::vector<Int>>& m,
                            std::vector<std::size_t>& pivots) {
    const std::size_t nrows = m.size();
    const std::size_t ncols = nrows ? m[0].size() : 0;
    Int prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t sel = r;
        while (sel < nrows && m[sel][c] == 0) ++sel;
        if (sel == nrows) continue;
        if (sel != r) m[r].swap(m[sel]);
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.push_back(c);
        ++r;
    }
    m.resize(pivots.size());
}

}  // namespace detail

/// Reduced row echelon form via fraction-free forward elimination over the
/// integers followed by rational back-substitution. Canonical: identical row
/// spaces yield identical results.
inline RrefResult rref_dense(const RationalMatrix& input) {
    std::vector<std::vector<Int>> m;
    m.reserve(input.size());
    for (const auto& row : input) {
        Int lcm(1);
        for (const auto& v : row) {
            const Int d = boost::multiprecision::denominator(v);
            lcm = boost::multiprecision::lcm(lcm, d);
        }
        std::vector<Int> irow;
        irow.reserve(row.size());
        for (const auto& v : row)
            irow.push_back(boost::multiprecision::numerator(v) * (lcm / boost::multiprecision::denominator(v)));
        m.push_back(std::move(irow));
    }
    RrefResult out;
    detail::bareiss_echelon(m, out.pivots);
    const std::size_t rank = out.pivots.size();
    const std::size_t ncols = input.empty() ? 0 : input[0].size();
    out.rows.assign(rank, std::vector<Rational>(ncols, Rational(0)));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = out.pivots[i]; j < ncols; ++j)
            out.rows[i][j] = make_rational(m[i][j], m[i][out.pivots[i]]);
    // eliminate above pivots
    for (std::size_t i = rank; i-- > 0;) {
        const std::size_t pc = out.pivots[i];
        for (std::size_t k = 0; k < i; ++k) {
            const Rational f = out.rows[k][pc];
            if (f == 0) continue;
            for (std::size_t j = pc; j < ncols; ++j)
                out.rows[k][j] -= f * out.rows[i][j];
        }
    }
    return out;
}

/// Basis of {x : Mx = 0} read off the reduced echelon form: one vector per
/// free column f, with 1 at f and -coef at each pivot column.
inline RationalMatrix null_space_dense(const RationalMatrix& input, std::size_t ncols) {
    const RrefResult r = rref_dense(input);
    RationalMatrix basis;
    std::size_t pi = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
        if (pi < r.pivots.size() && r.pivots[pi] == c) {
            ++pi;
            continue;
        }
        std::vector<Rational> v(ncols, Rational(0));
        v[c] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            if (r.pivots[i] < c) v[r.pivots[i]] = -r.rows[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact inverse of a square rational matrix; throws on singular input.
inline RationalMatrix inverse_dense(const RationalMatrix& a) {
    const std::size_t n = a.size();
    RationalMatrix aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("inverse_dense: not square");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    const RrefResult r = rref_dense(aug);
    if (r.rank() != n || r.pivots.back() != n - 1)
        throw std::invalid_argument("inverse_dense: singular matrix");
    RationalMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = r.rows[i][n + j];
    return inv;
}

/// Double-precision inverse with partial pivoting (float mode).
inline std::vector<std::vector<double>> inverse_dense_f(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        for (std::size_t i = c + 1; i < n; ++i)
            if (std::abs(a[i][c]) > std::abs(a[sel][c])) sel = i;
        if (a[sel][c] == 0.0) throw std::invalid_argument("inverse_dense_f: singular matrix");
        a[c].swap(a[sel]);
        inv[c].swap(inv[sel]);
        const double piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0.0) continue;
            const double f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace lpkern
