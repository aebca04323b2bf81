#pragma once

#include "lpkern/sparse_space.hpp"
#include "lpkern/support_graph.hpp"

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace lpkern {

/// Sparse operator stored column-major: (column label, column vector), sorted
/// by column label, zero columns omitted.
template <class S>
struct LinearOperator {
    SpaceDescriptor domain;
    SpaceDescriptor codomain;
    std::vector<std::pair<Label, SparseVector<S>>> cols;

    const SparseVector<S>* column(Label c) const {
        auto it = std::lower_bound(cols.begin(), cols.end(), c,
                                   [](const auto& e, Label lab) { return e.first < lab; });
        if (it != cols.end() && it->first == c) return &it->second;
        return nullptr;
    }

    void set_column(Label c, SparseVector<S> v) {
        if (v.is_zero()) return;
        if (!cols.empty() && c <= cols.back().first)
            throw std::invalid_argument("operator columns must be set in ascending order");
        cols.emplace_back(c, std::move(v));
    }

    SparseVector<S> apply(const SparseVector<S>& x) const {
        SparseVector<S> acc;
        for (const auto& [lab, val] : x.entries)
            if (const auto* col = column(lab)) acc = acc.axpy(val, *col);
        return acc;
    }

    friend bool operator==(const LinearOperator&, const LinearOperator&) = default;
};

template <class S>
LinearOperator<S> adjoint(const LinearOperator<S>& t) {
    std::vector<std::tuple<Label, Label, S>> trips;  // (row, col, value) of T
    for (const auto& [c, col] : t.cols)
        for (const auto& [r, val] : col.entries) trips.emplace_back(r, c, val);
    std::sort(trips.begin(), trips.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) <
               std::tie(std::get<0>(b), std::get<1>(b));
    });
    LinearOperator<S> out{t.codomain.dual(), t.domain.dual(), {}};
    for (const auto& [r, c, val] : trips) {
        if (out.cols.empty() || out.cols.back().first != r) out.cols.emplace_back(r, SparseVector<S>{});
        out.cols.back().second.entries.emplace_back(c, val);
    }
    return out;
}

/// theta: (vector id, group index n, 1-based) -> fresh coordinate label.
struct InjectionMap {
    std::vector<std::tuple<VectorId, std::uint32_t, Label>> entries;  // sorted (n, vid)

    Label at(VectorId vid, std::uint32_t n) const;
    bool injective() const;

    /// Deterministic allocator: labels from the tail of the universe,
    /// highest first, walking groups in order and members by ascending id.
    static InjectionMap tail_allocator(const DisjointPartition& part,
                                       const SpaceDescriptor& domain);
};

struct DenseImageResult {
    LinearOperator<Rational> op;
    bool normalizers_exact = true;  // every column scaled by an exact norm
    // per column: (label, vid, group n, normalizer nu >= ||d||)
    std::vector<std::tuple<Label, VectorId, std::uint32_t, Rational>> columns;
};

/// Dense-image operator: column theta(d, n) carries d / (2^n nu(d)).
/// Zero members are dropped; theta must be injective and inside the universe.
DenseImageResult dense_image_operator(const VectorFamily<Rational>& fam,
                                      const DisjointPartition& part,
                                      const InjectionMap& theta);

struct NormCheckReport {
    std::uint64_t trials = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Randomized contraction and block-isometry check for a dense-image operator.
/// Exact rational comparisons for integer p and c0; float tolerance otherwise.
NormCheckReport operator_norm_bound_check(const DenseImageResult& built,
                                          std::uint64_t trials, std::uint64_t seed);

/// Duality pipeline: annihilate Y in the dual, span it with a biorthogonal
/// system, partition, build the dense-image operator there, and take the
/// adjoint. Requires an lp model with 1 < p < infinity.
LinearOperator<Rational> kernel_operator_via_duality(const VectorFamily<Rational>& y);

/// Quotient route T = R.q: project along span Y onto the non-pivot
/// coordinates of its echelon form, re-embedded by coordinate inclusion.
/// Works for every space kind, including c0 and p = 1.
LinearOperator<Rational> kernel_operator_via_quotient(const VectorFamily<Rational>& y,
                                                      const SpaceDescriptor& x);

struct LpSumDecomposition {
    std::vector<VectorFamily<Rational>> blocks;
    std::vector<std::vector<Label>> block_supports;  // pairwise disjoint, sorted
};

LpSumDecomposition lp_sum_decomposition(const VectorFamily<Rational>& y,
                                        const ComponentDecomposition& comp);

/// ||sum z_xi||_p^p == sum ||z_xi||_p^p for per-block vectors, exact, integer p.
bool lp_sum_isometry_exact(const LpSumDecomposition& dec,
                           const std::vector<SparseVector<Rational>>& block_vectors,
                           unsigned p);

/// {"domain":...,"codomain":...,"triplets":[[row,col,num,den],...]} sorted by (row,col).
std::string operator_to_json(const LinearOperator<Rational>& t);
LinearOperator<Rational> operator_from_json(const std::string& text);

}  // namespace lpkern
