#pragma once

#include "lpkern/family.hpp"

#include <iosfwd>
#include <string>

namespace lpkern {

/// JSONL family format. Header line:
///   {"space":"lp"|"c0","p":[num,den],"universe_size":N}
/// then one vector per line:
///   {"id":u,"coords":[[label,num,den],...]}        (oracle mode)
///   {"id":u,"coords":[[label,value],...]}          (float mode)
void write_family_jsonl(std::ostream& os, const VectorFamily<Rational>& fam);
void write_family_jsonl(std::ostream& os, const VectorFamily<double>& fam);

/// Reads either coordinate form; float entries convert exactly to rationals.
VectorFamily<Rational> read_family_jsonl(std::istream& is);

/// CSV ingestion: one `id,label,num,den` row per entry; the space comes from
/// the caller (CLI flags). Rows must be grouped by ascending id.
VectorFamily<Rational> read_family_csv(std::istream& is, const SpaceDescriptor& space);

VectorFamily<double> to_float_family(const VectorFamily<Rational>& fam);

}  // namespace lpkern
