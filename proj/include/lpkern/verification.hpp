#pragma once

#include "lpkern/operator_builder.hpp"
#include "lpkern/sparse_space.hpp"

#include <string>
#include <vector>

namespace lpkern {

/// Canonical subspace handle: rows in reduced echelon form over the ordered
/// universe, so equality of subspaces is equality of representations.
struct SubspaceBasis {
    SpaceDescriptor ambient;
    VectorFamily<Rational> basis;

    std::size_t dim() const { return basis.size(); }
};

/// Canonicalize a spanning family to its reduced echelon basis.
SubspaceBasis rref_basis(const VectorFamily<Rational>& fam);

/// Exact basis of {x : Tx = 0}, canonical form; obeys rank-nullity.
SubspaceBasis kernel_basis(const LinearOperator<Rational>& t);

/// Canonical basis of the column space of T (the finite rendering of the
/// closure of the image).
SubspaceBasis column_space_basis(const LinearOperator<Rational>& t);

std::size_t rank(const LinearOperator<Rational>& t);
std::size_t rank(const VectorFamily<Rational>& fam);

/// Oracle-mode equality: identical canonical forms. Throws on ambient mismatch.
bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b);

/// Float-mode equality via mutual projection residuals (relative tolerance).
bool subspace_equal_f(const std::vector<SparseVector<double>>& a,
                      const std::vector<SparseVector<double>>& b, double tol = 1e-9);

struct CheckFailure {
    std::string identity;
    std::string witness;
};

struct CheckReport {
    std::string check;
    std::uint64_t instances = 0;
    std::vector<CheckFailure> failures;
    std::string notes;  // extra JSON payload (group counts, histograms)

    bool ok() const { return failures.empty(); }
    std::string to_json() const;
};

/// Annihilator identities behind the reflexive-duality argument:
///   (i)  ker T = pre_annihilator(row space of T)
///   (ii) annihilator(ker T) = row space of T
///   (iii) pre_annihilator(annihilator(ker T)) = ker T
/// Requires an lp model with 1 < p < infinity.
CheckReport check_duality_chain(const LinearOperator<Rational>& t);

/// Full (b) -> (c) -> (a) chain on a concrete family: incidence, both
/// component algorithms (must agree), partition invariants, dense-image
/// operator with rank = dim span D and every member inside the column space.
CheckReport check_lemma25_roundtrip(const VectorFamily<Rational>& d);

}  // namespace lpkern
