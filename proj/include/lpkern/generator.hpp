#pragma once

#include "lpkern/family.hpp"

#include <cstdint>

namespace lpkern {

enum class SupportDist { Fixed, Geometric };

/// Seeded generator configuration; identical configs yield identical families.
struct GenConfig {
    std::uint64_t n_vectors = 0;
    SupportDist dist = SupportDist::Fixed;
    std::uint64_t support_param = 4;  // fixed size k, or geometric mean
    std::int64_t num_lo = -8;
    std::int64_t num_hi = 8;
    std::int64_t den_max = 8;
    std::uint64_t seed = 0;
    SpaceDescriptor space;

    void validate() const;
};

VectorFamily<Rational> generate_family(const GenConfig& cfg);

/// Supports only (no values); what the partition benchmarks consume.
SupportFamily generate_supports(const GenConfig& cfg);

}  // namespace lpkern
