#pragma once

#include "lpkern/elimination.hpp"
#include "lpkern/family.hpp"

#include <algorithm>
#include <vector>

namespace lpkern {

/// Sorted union of the supports of a family.
template <class S>
std::vector<Label> occupied_labels(const VectorFamily<S>& fam) {
    std::vector<Label> out;
    for (const auto& v : fam.vectors)
        for (const auto& [lab, val] : v.entries) out.push_back(lab);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline RationalMatrix to_dense(const VectorFamily<Rational>& fam,
                               const std::vector<Label>& cols) {
    RationalMatrix m(fam.size(), std::vector<Rational>(cols.size(), Rational(0)));
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (const auto& [lab, val] : fam.vectors[i].entries) {
            const auto it = std::lower_bound(cols.begin(), cols.end(), lab);
            m[i][static_cast<std::size_t>(it - cols.begin())] = val;
        }
    return m;
}

inline SparseVector<Rational> from_dense(const std::vector<Rational>& row,
                                         const std::vector<Label>& cols) {
    SparseVector<Rational> v;
    for (std::size_t j = 0; j < cols.size(); ++j)
        if (row[j] != 0) v.entries.emplace_back(cols[j], row[j]);
    return v;
}

namespace detail {

/// Canonical basis of {f : <y, f> = 0 for all y in fam}, as RREF rows over the
/// full ordered universe: RREF of the null space on occupied labels, plus a
/// unit vector at every unoccupied label.
inline VectorFamily<Rational> null_space_family(const VectorFamily<Rational>& fam,
                                                SpaceDescriptor out_space) {
    const std::vector<Label> cols = occupied_labels(fam);
    RationalMatrix null_rows = null_space_dense(to_dense(fam, cols), cols.size());
    const RrefResult canon = rref_dense(null_rows);

    std::vector<SparseVector<Rational>> rows;
    rows.reserve(canon.rank() + out_space.universe_size - cols.size());
    for (const auto& r : canon.rows) rows.push_back(from_dense(r, cols));
    std::size_t ci = 0;
    for (Label g = 0; g < out_space.universe_size; ++g) {
        if (ci < cols.size() && cols[ci] == g) {
            ++ci;
            continue;
        }
        rows.push_back(unit_vector<Rational>(g, out_space));
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return a.entries.front().first < b.entries.front().first;
    });
    VectorFamily<Rational> out(out_space);
    for (std::size_t i = 0; i < rows.size(); ++i)
        out.push_back(static_cast<VectorId>(i), std::move(rows[i]));
    return out;
}

}  // namespace detail

/// Y^perp: canonical spanning set of the functionals vanishing on span Y.
inline VectorFamily<Rational> annihilator(const VectorFamily<Rational>& y) {
    return detail::null_space_family(y, y.space.dual());
}

/// Z_perp: vectors killed by every functional in span Z.
inline VectorFamily<Rational> pre_annihilator(const VectorFamily<Rational>& z) {
    return detail::null_space_family(z, z.space.dual());
}

}  // namespace lpkern
