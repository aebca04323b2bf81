#pragma once

#include "lpkern/family.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lpkern {

/// CSR-style index: for each occupied coordinate, the ascending vector ids
/// supported there. Coordinates with empty incidence are omitted.
struct IncidenceIndex {
    std::vector<Label> coords;           // sorted distinct
    std::vector<std::size_t> offsets;    // coords.size() + 1
    std::vector<VectorId> vids;          // grouped per coord, ascending

    std::size_t coord_count() const { return coords.size(); }

    std::span<const VectorId> at(Label g) const;
    std::span<const VectorId> group(std::size_t i) const {
        return {vids.data() + offsets[i], vids.data() + offsets[i + 1]};
    }
};

IncidenceIndex build_incidence(const SupportFamily& fam);

/// Connected components of the support-intersection relation.
/// component_of is parallel to the family order; component ids are the
/// minimum vector id of their members.
struct ComponentDecomposition {
    std::vector<VectorId> member_ids;                                   // = family ids
    std::vector<VectorId> component_of;                                 // per member
    std::vector<std::pair<VectorId, std::vector<VectorId>>> components; // sorted by id

    std::size_t max_component_size() const;

    friend bool operator==(const ComponentDecomposition&, const ComponentDecomposition&) = default;
};

/// Union-find over vector ids, merged coordinate-by-coordinate through the
/// incidence index (the equivalence-relation route). Throws on a zero member.
ComponentDecomposition components_equivrel(const SupportFamily& fam);

/// Breadth-first traversal of the support-intersection graph (the
/// graph-colouring route). Same contract, independent implementation.
ComponentDecomposition components_graph(const SupportFamily& fam);

/// Group n holds the n-th member (ascending vector id) of every component
/// with at least n members; within each group supports are pairwise disjoint.
struct DisjointPartition {
    std::vector<std::vector<VectorId>> groups;

    friend bool operator==(const DisjointPartition&, const DisjointPartition&) = default;
};

DisjointPartition disjoint_partition(const SupportFamily& fam,
                                     const ComponentDecomposition& comp);

/// {"n_vectors":u,"n_components":u,"max_component":u,"n_groups":u,
///  "component_size_histogram":[[size,count],...]} as a JSON string.
std::string partition_report(const SupportFamily& fam,
                             const ComponentDecomposition& comp,
                             const DisjointPartition& part);

/// FNV-1a hash of the partition layout; stable across runs and thread counts.
std::uint64_t partition_hash(const DisjointPartition& part);

}  // namespace lpkern
