#include "lpkern/biorthogonal.hpp"

#include "lpkern/elimination.hpp"

#include <cmath>
#include <stdexcept>

namespace lpkern {

namespace {

template <class S>
std::vector<std::vector<S>> dense_rows(const VectorFamily<S>& fam,
                                       const std::vector<Label>& cols) {
    std::vector<std::vector<S>> m(fam.size(), std::vector<S>(cols.size(), S(0)));
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (const auto& [lab, val] : fam.vectors[i].entries) {
            const auto it = std::lower_bound(cols.begin(), cols.end(), lab);
            m[i][static_cast<std::size_t>(it - cols.begin())] = val;
        }
    return m;
}

/// Greedy leftmost-pivot basis selection in vector_id order. Maintains an
/// incremental echelon set; returns the selected member positions and, for
/// the selected basis, the pivot column of each echelon row.
template <class S>
std::vector<std::size_t> select_basis(const std::vector<std::vector<S>>& rows,
                                      double rel_tol) {
    std::vector<std::size_t> chosen;
    std::vector<std::vector<S>> ech;      // echelon rows, pivot normalized to 1
    std::vector<std::size_t> ech_pivot;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<S> r = rows[i];
        double scale = 0.0;
        if constexpr (std::is_same_v<S, double>)
            for (double v : r) scale = std::max(scale, std::abs(v));
        for (std::size_t e = 0; e < ech.size(); ++e) {
            const S f = r[ech_pivot[e]];
            if (f == S(0)) continue;
            for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * ech[e][j];
        }
        std::size_t pc = r.size();
        for (std::size_t j = 0; j < r.size(); ++j) {
            bool nonzero;
            if constexpr (std::is_same_v<S, double>)
                nonzero = std::abs(r[j]) > rel_tol * (scale > 0 ? scale : 1.0);
            else
                nonzero = r[j] != S(0);
            if (nonzero) {
                pc = j;
                break;
            }
        }
        if (pc == r.size()) continue;  // dependent on earlier members
        const S piv = r[pc];
        for (std::size_t j = 0; j < r.size(); ++j) r[j] /= piv;
        // keep echelon rows mutually reduced
        for (std::size_t e = 0; e < ech.size(); ++e) {
            const S f = ech[e][pc];
            if (f == S(0)) continue;
            for (std::size_t j = 0; j < r.size(); ++j) ech[e][j] -= f * r[j];
        }
        ech.push_back(std::move(r));
        ech_pivot.push_back(pc);
        chosen.push_back(i);
    }
    return chosen;
}

template <class S>
BiorthogonalSystem<S> build_system(const VectorFamily<S>& y, double rel_tol) {
    const std::vector<Label> cols = occupied_labels(y);
    if (cols.empty()) throw std::invalid_argument("markushevich: zero subspace");
    const auto rows = dense_rows(y, cols);
    const auto chosen = select_basis(rows, rel_tol);

    // pivot columns of the selected basis, leftmost per echelon step
    std::vector<std::vector<S>> basis;
    basis.reserve(chosen.size());
    for (std::size_t i : chosen) basis.push_back(rows[i]);
    std::vector<std::size_t> pivots;
    {
        auto work = basis;
        const std::size_t k = work.size();
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols.size() && r < k; ++c) {
            std::size_t sel = r;
            if constexpr (std::is_same_v<S, double>) {
                for (std::size_t i = r + 1; i < k; ++i)
                    if (std::abs(work[i][c]) > std::abs(work[sel][c])) sel = i;
                if (std::abs(work[sel][c]) <= rel_tol) continue;
            } else {
                while (sel < k && work[sel][c] == S(0)) ++sel;
                if (sel == k) continue;
            }
            work[r].swap(work[sel]);
            for (std::size_t i = r + 1; i < k; ++i) {
                const S f = work[i][c] / work[r][c];
                for (std::size_t j = c; j < cols.size(); ++j) work[i][j] -= f * work[r][j];
            }
            pivots.push_back(c);
            ++r;
        }
    }
    const std::size_t k = chosen.size();
    std::vector<std::vector<S>> m(k, std::vector<S>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = basis[i][pivots[j]];

    std::vector<std::vector<S>> inv;
    if constexpr (std::is_same_v<S, double>)
        inv = inverse_dense_f(m);
    else
        inv = inverse_dense(m);

    BiorthogonalSystem<S> sys;
    sys.vectors = VectorFamily<S>(y.space);
    sys.functionals = VectorFamily<S>(y.space.dual());
    for (std::size_t j = 0; j < k; ++j) {
        sys.vectors.push_back(y.ids[chosen[j]], y.vectors[chosen[j]]);
        SparseVector<S> f;
        for (std::size_t i = 0; i < k; ++i)
            if (inv[i][j] != S(0)) f.entries.emplace_back(cols[pivots[i]], inv[i][j]);
        sys.functionals.push_back(y.ids[chosen[j]], std::move(f));
    }
    return sys;
}

}  // namespace

BiorthogonalSystem<Rational> markushevich(const VectorFamily<Rational>& y) {
    return build_system<Rational>(y, 0.0);
}

BiorthogonalSystem<double> markushevich_f(const VectorFamily<double>& y) {
    return build_system<double>(y, 1e-12);
}

IncidenceCount incidence_count(const BiorthogonalSystem<Rational>& sys,
                               const SparseVector<Rational>& f) {
    IncidenceCount out;
    for (std::size_t j = 0; j < sys.vectors.size(); ++j)
        if (pairing(sys.vectors.vectors[j], f) != 0) out.witnesses.push_back(sys.vectors.ids[j]);
    out.count = out.witnesses.size();
    return out;
}

}  // namespace lpkern
