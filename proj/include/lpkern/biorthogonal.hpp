#pragma once

#include "lpkern/sparse_space.hpp"

#include <cstdint>
#include <vector>

namespace lpkern {

/// Biorthogonal (Markushevich) system: spanning vectors y_j with total
/// functionals f_j, pairing(y_j, f_k) = delta_jk.
template <class S>
struct BiorthogonalSystem {
    VectorFamily<S> vectors;      // y_j, in the ambient space
    VectorFamily<S> functionals;  // f_j, ambient dual representatives
};

/// Construct a biorthogonal system for span Y. Basis vectors are picked
/// greedily in vector_id order (leftmost pivot selection); functionals are the
/// minimal-support solutions carried on the pivot coordinates. Throws on the
/// zero subspace.
BiorthogonalSystem<Rational> markushevich(const VectorFamily<Rational>& y);

/// Float-mode construction, same selection rules, double arithmetic.
BiorthogonalSystem<double> markushevich_f(const VectorFamily<double>& y);

struct IncidenceCount {
    std::size_t count = 0;
    std::vector<VectorId> witnesses;  // ids j with pairing(y_j, f) != 0
};

/// |{j : <y_j, f> != 0}| with witnesses.
IncidenceCount incidence_count(const BiorthogonalSystem<Rational>& sys,
                               const SparseVector<Rational>& f);

}  // namespace lpkern
