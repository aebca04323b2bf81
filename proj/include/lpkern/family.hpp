#pragma once

#include "lpkern/sparse_vector.hpp"

#include <stdexcept>
#include <vector>

namespace lpkern {

/// Ordered family (vector_id, vector) over a shared space model; ids strictly increase.
template <class S>
struct VectorFamily {
    SpaceDescriptor space;
    std::vector<VectorId> ids;
    std::vector<SparseVector<S>> vectors;

    VectorFamily() = default;
    explicit VectorFamily(SpaceDescriptor sp) : space(sp) {}

    std::size_t size() const { return ids.size(); }
    bool empty() const { return ids.empty(); }

    void push_back(VectorId id, SparseVector<S> v) {
        if (!ids.empty() && id <= ids.back())
            throw std::invalid_argument("family: vector ids must be strictly increasing");
        if (!v.is_zero() && !space.contains(v.max_label()))
            throw std::out_of_range("family: vector label outside universe");
        ids.push_back(id);
        vectors.push_back(std::move(v));
    }

    /// Copy with zero members dropped, ids preserved.
    VectorFamily without_zeros() const {
        VectorFamily out(space);
        for (std::size_t i = 0; i < size(); ++i)
            if (!vectors[i].is_zero()) out.push_back(ids[i], vectors[i]);
        return out;
    }

    friend bool operator==(const VectorFamily&, const VectorFamily&) = default;
};

/// The support structure of a family, detached from scalar values.
/// This is all the partition engine ever looks at.
struct SupportFamily {
    std::vector<VectorId> ids;
    std::vector<std::vector<Label>> supports;  // each sorted ascending

    std::size_t size() const { return ids.size(); }

    template <class S>
    static SupportFamily of(const VectorFamily<S>& fam) {
        SupportFamily sf;
        sf.ids = fam.ids;
        sf.supports.reserve(fam.size());
        for (const auto& v : fam.vectors) sf.supports.push_back(v.support());
        return sf;
    }
};

}  // namespace lpkern
